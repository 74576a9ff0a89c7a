#include <doctest.h>

#include <string>

#include "qmetrics/errors.hpp"
#include "qmetrics/qiskit_parser.hpp"
#include "qmetrics/source_text.hpp"

using namespace qmetrics;
using qiskit::parse_qiskit_dialect;

namespace {

std::string fixture(const std::string& name) {
    return read_text_file(std::string(QMETRICS_FIXTURES_DIR) + "/code/" + name);
}

}  // namespace

TEST_CASE("the 16-line example program parses with the expected shape") {
    QProgram p = parse_qiskit_dialect(fixture("example.py"));
    CHECK(p.source_dialect == Dialect::qiskit_dialect);
    CHECK(p.source_lines_total == 16);
    REQUIRE(p.statements.size() == 16);
    REQUIRE(p.modules.size() == 1);
    CHECK(p.main_module().length_loc == 16);

    REQUIRE(p.registers.size() == 2);
    CHECK(p.registers[0] == RegisterDecl{"qreg", RegisterKind::quantum, 2});
    CHECK(p.registers[1] == RegisterDecl{"creg", RegisterKind::classical, 2});

    StatementKind expected[16] = {
        StatementKind::classical,        StatementKind::classical,
        StatementKind::classical,        StatementKind::classical,
        StatementKind::gate_application, StatementKind::gate_application,
        StatementKind::gate_application, StatementKind::gate_application,
        StatementKind::gate_application, StatementKind::gate_application,
        StatementKind::loop_header,      StatementKind::measurement,
        StatementKind::classical,        StatementKind::classical,
        StatementKind::classical,        StatementKind::classical,
    };
    for (int i = 0; i < 16; ++i) {
        CAPTURE(i);
        CHECK(p.statements[i].kind == expected[i]);
        CHECK(p.statements[i].span.line == i + 1);
    }
    CHECK(p.statements[10].body_end == 11);
    CHECK(p.statements[11].registers_read == std::vector<std::string>{"q"});
    CHECK(p.statements[11].registers_written == std::vector<std::string>{"c"});
    CHECK(p.check_invariants() == std::nullopt);
}

TEST_CASE("gate and measure method calls classify by receiver and name") {
    QProgram p = parse_qiskit_dialect(
        "q = QuantumRegister(2)\n"
        "c = ClassicalRegister(2)\n"
        "circuit = QuantumCircuit(q, c)\n"
        "circuit.h(q[0])\n"
        "circuit.measure(q[1], c[1])\n"
        "other.h(q[0])\n"
        "circuit.calibrate(q[0])\n");
    CHECK(p.statements[3].kind == StatementKind::gate_application);
    CHECK(p.statements[3].gate_name == "h");
    CHECK(p.statements[4].kind == StatementKind::measurement);
    // 'other' is not circuit-valued, 'calibrate' is not in the gate set
    CHECK(p.statements[5].kind == StatementKind::classical);
    CHECK(p.statements[6].kind == StatementKind::classical);
}

TEST_CASE("a lone register assignment declares width from the literal") {
    QProgram p = parse_qiskit_dialect("q = QuantumRegister(3)\n");
    REQUIRE(p.statements.size() == 1);
    CHECK(p.statements[0].kind == StatementKind::classical);
    REQUIRE(p.registers.size() == 1);
    CHECK(p.registers[0] == RegisterDecl{"q", RegisterKind::quantum, 3});
}

TEST_CASE("loop header precedes its body statement inside main") {
    QProgram p = parse_qiskit_dialect(
        "q = QuantumRegister(2)\n"
        "circuit = QuantumCircuit(q)\n"
        "for i in range(2):\n"
        "    circuit.h(q[i])\n");
    REQUIRE(p.statements.size() == 4);
    CHECK(p.statements[2].kind == StatementKind::loop_header);
    CHECK(p.statements[2].body_end == 3);
    CHECK(p.statements[3].kind == StatementKind::gate_application);
    REQUIRE(p.modules.size() == 1);
    CHECK(p.main_module().statement_indices.size() == 4);
}

TEST_CASE("integer-literal circuits synthesize registers") {
    QProgram p = parse_qiskit_dialect(fixture("intliteral.py"));
    REQUIRE(p.registers.size() == 2);
    CHECK(p.registers[0] == RegisterDecl{"_q", RegisterKind::quantum, 3});
    CHECK(p.registers[1] == RegisterDecl{"_c", RegisterKind::classical, 2});
    CHECK(p.statements[1].kind == StatementKind::gate_application);
    CHECK(p.statements[1].registers_written.empty());  // integer arguments
}

TEST_CASE("circuit aliases keep classifying method calls") {
    QProgram p = parse_qiskit_dialect(fixture("ops_mix.py"));
    CHECK(p.statements[5].kind == StatementKind::gate_application);  // alias.rx
    CHECK(p.statements[5].registers_written == std::vector<std::string>{"qr"});
    const QStatement& crz = p.statements[6];
    CHECK(crz.registers_read == std::vector<std::string>{"qr"});  // control
    CHECK(p.statements[7].kind == StatementKind::classical);      // barrier
    CHECK(p.statements[8].kind == StatementKind::classical);      // reset
    CHECK(p.check_invariants() == std::nullopt);
}

TEST_CASE("defs become modules and call sites are recorded") {
    QProgram p = parse_qiskit_dialect(fixture("subroutines.py"));
    REQUIRE(p.modules.size() == 3);
    const QModule* prepare = p.find_module("prepare");
    const QModule* readout = p.find_module("readout");
    REQUIRE(prepare != nullptr);
    REQUIRE(readout != nullptr);
    CHECK(prepare->statement_indices.size() == 2);
    CHECK(prepare->length_loc == 2);
    CHECK(readout->statement_indices.size() == 1);

    int prepare_calls = 0;
    int readout_calls = 0;
    for (int idx : p.main_module().statement_indices) {
        for (const auto& callee : p.statements[idx].callees) {
            if (callee == "prepare") ++prepare_calls;
            if (callee == "readout") ++readout_calls;
        }
    }
    CHECK(prepare_calls == 2);
    CHECK(readout_calls == 1);
    CHECK(p.check_invariants() == std::nullopt);
}

TEST_CASE("measure_all reads declared quantum and writes declared classical registers") {
    QProgram p = parse_qiskit_dialect(fixture("loops.py"));
    const QStatement& m = p.statements[p.statements.size() - 2];
    CHECK(m.kind == StatementKind::measurement);
    CHECK(m.registers_read == std::vector<std::string>{"q"});
    CHECK(m.registers_written == std::vector<std::string>{"c"});
}

TEST_CASE("call sites are found inside assignment right-hand sides") {
    QProgram p = parse_qiskit_dialect(
        "def helper(n):\n"
        "    print(n)\n"
        "x = helper(1) + helper(2)\n");
    const QStatement& call = p.statements.back();
    CHECK(call.callees == std::vector<std::string>{"helper", "helper"});
}

TEST_CASE("constructs outside the dialect are rejected") {
    CHECK_THROWS_AS(parse_qiskit_dialect("while 1 == 1:\n    print(1)\n"),
                    UnsupportedSyntaxError);
    CHECK_THROWS_AS(parse_qiskit_dialect("import qiskit\n"), UnsupportedSyntaxError);
    CHECK_THROWS_AS(parse_qiskit_dialect("class Foo:\n    print(1)\n"), UnsupportedSyntaxError);
    CHECK_THROWS_AS(parse_qiskit_dialect("x = [1, 2]\n"), UnsupportedSyntaxError);
    CHECK_THROWS_AS(parse_qiskit_dialect("for x in items:\n    print(x)\n"),
                    UnsupportedSyntaxError);
    CHECK_THROWS_AS(parse_qiskit_dialect("x.y = 1\n"), UnsupportedSyntaxError);
    CHECK_THROWS_AS(parse_qiskit_dialect("def f():\n    def g():\n        print(1)\n"),
                    UnsupportedSyntaxError);
}

TEST_CASE("error positions point at the offending line") {
    try {
        parse_qiskit_dialect("x = 1\nwhile x == 1:\n    print(x)\n");
        FAIL("expected UnsupportedSyntaxError");
    } catch (const UnsupportedSyntaxError& e) {
        CHECK(e.span().line == 2);
    }
}

TEST_CASE("indentation errors") {
    CHECK_THROWS_AS(parse_qiskit_dialect("if x == 1:\nprint(x)\n"), IndentationError);
    CHECK_THROWS_AS(parse_qiskit_dialect("print(1)\n    print(2)\n"), IndentationError);
    CHECK_THROWS_AS(parse_qiskit_dialect("if x == 1:\n    print(1)\n  print(2)\n"),
                    IndentationError);
    CHECK_THROWS_AS(parse_qiskit_dialect("if x == 1:\n\tprint(1)\n"), IndentationError);
    CHECK_THROWS_AS(parse_qiskit_dialect("if x == 1:\n"), IndentationError);
    // nested block must out-indent its header
    QProgram ok = parse_qiskit_dialect("if x == 1:\n    if x == 2:\n        print(x)\n");
    CHECK(ok.statements.size() == 3);
}

TEST_CASE("parsing twice yields structurally equal programs") {
    std::string source = fixture("grover2.py");
    QProgram a = parse_qiskit_dialect(source);
    QProgram b = parse_qiskit_dialect(source);
    CHECK(a.statements == b.statements);
    CHECK(a.registers == b.registers);
    CHECK(a.modules == b.modules);
    CHECK(a.halstead_tokens == b.halstead_tokens);
}
