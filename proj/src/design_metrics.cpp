#include "qmetrics/design_metrics.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "qmetrics/errors.hpp"
#include "qmetrics/source_text.hpp"

namespace qmetrics {

using nlohmann::json;

std::string_view to_string(DesignFormat f) {
    switch (f) {
        case DesignFormat::arch: return "arch";
        case DesignFormat::patterns: return "patterns";
        case DesignFormat::quml: return "quml";
    }
    return "?";
}

const ArchComponent* ArchitectureSpec::find_component(std::string_view name) const {
    for (const auto& c : components) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

json parse_json(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("document", "not valid JSON");
    if (!doc.is_object()) throw SchemaError("document", "top level must be an object");
    return doc;
}

std::string require_string(const json& node, const char* field, std::string_view where) {
    if (!node.contains(field) || !node[field].is_string())
        throw SchemaError(where, std::string("missing string field '") + field + "'");
    return node[field].get<std::string>();
}

bool quantum_flag(const json& node, std::string_view where) {
    if (!node.contains("quantum")) return false;
    if (!node["quantum"].is_boolean())
        throw SchemaError(where, "field 'quantum' must be a boolean");
    return node["quantum"].get<bool>();
}

const json& member_array(const json& node, const char* field, std::string_view where) {
    static const json empty = json::array();
    if (!node.contains(field)) return empty;
    if (!node[field].is_array())
        throw SchemaError(where, std::string("field '") + field + "' must be an array");
    return node[field];
}

std::string at(std::string_view list, std::size_t index) {
    return std::string(list) + "[" + std::to_string(index) + "]";
}

}  // namespace

ArchitectureSpec parse_arch_text(std::string_view text) {
    json doc = parse_json(text);
    ArchitectureSpec spec;
    spec.source_lines = count_source_lines(text, "//");

    std::set<std::string> names;
    const json& components = member_array(doc, "components", "document");
    for (std::size_t i = 0; i < components.size(); ++i) {
        std::string where = at("components", i);
        const json& node = components[i];
        if (!node.is_object()) throw SchemaError(where, "must be an object");
        ArchComponent c;
        c.name = require_string(node, "name", where);
        std::string kind = require_string(node, "kind", where);
        if (kind != "quantum" && kind != "classical")
            throw SchemaError(where, "kind must be 'quantum' or 'classical'");
        c.quantum = kind == "quantum";
        if (!names.insert(c.name).second)
            throw SchemaError(where, "duplicate component name '" + c.name + "'");
        spec.components.push_back(std::move(c));
    }

    const json& connectors = member_array(doc, "connectors", "document");
    for (std::size_t i = 0; i < connectors.size(); ++i) {
        std::string where = at("connectors", i);
        const json& node = connectors[i];
        if (!node.is_object()) throw SchemaError(where, "must be an object");
        ArchConnector c{require_string(node, "from", where), require_string(node, "to", where)};
        if (names.count(c.from) == 0) throw UnknownComponentError(c.from);
        if (names.count(c.to) == 0) throw UnknownComponentError(c.to);
        spec.connectors.push_back(std::move(c));
    }
    return spec;
}

PatternRecord parse_patterns_text(std::string_view text) {
    json doc = parse_json(text);
    PatternRecord record;

    std::set<std::string> types;
    const json& patterns = member_array(doc, "patterns", "document");
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        std::string where = at("patterns", i);
        const json& node = patterns[i];
        if (!node.is_object()) throw SchemaError(where, "must be an object");
        PatternEntry entry;
        entry.type_name = require_string(node, "type", where);
        entry.quantum = quantum_flag(node, where);
        if (!types.insert(entry.type_name).second)
            throw SchemaError(where, "duplicate pattern type '" + entry.type_name + "'");
        const json& instances = member_array(node, "instances", where);
        for (std::size_t k = 0; k < instances.size(); ++k) {
            if (!instances[k].is_string())
                throw SchemaError(at(where + ".instances", k), "must be a string");
            entry.instances.push_back(instances[k].get<std::string>());
        }
        if (entry.instances.empty())
            throw SchemaError(where, "pattern entry needs at least one instance");
        record.patterns.push_back(std::move(entry));
    }
    return record;
}

QumlModel parse_quml_text(std::string_view text) {
    json doc = parse_json(text);
    QumlModel model;

    auto parse_members = [](const json& node, const char* field,
                            std::string_view where) -> std::vector<QumlMember> {
        std::vector<QumlMember> out;
        const json& arr = member_array(node, field, where);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string mwhere = at(std::string(where) + "." + field, i);
            if (!arr[i].is_object()) throw SchemaError(mwhere, "must be an object");
            out.push_back({require_string(arr[i], "name", mwhere),
                           quantum_flag(arr[i], mwhere)});
        }
        return out;
    };

    std::set<std::string> names;
    const json& classes = member_array(doc, "classes", "document");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string where = at("classes", i);
        const json& node = classes[i];
        if (!node.is_object()) throw SchemaError(where, "must be an object");
        QumlClass cls;
        cls.name = require_string(node, "name", where);
        if (!names.insert(cls.name).second)
            throw SchemaError(where, "duplicate class name '" + cls.name + "'");
        cls.quantum = quantum_flag(node, where);
        cls.attributes = parse_members(node, "attributes", where);
        cls.methods = parse_members(node, "methods", where);
        cls.interfaces = parse_members(node, "interfaces", where);

        const json& elements = member_array(node, "elements", where);
        for (std::size_t k = 0; k < elements.size(); ++k) {
            std::string ewhere = at(where + ".elements", k);
            if (!elements[k].is_object()) throw SchemaError(ewhere, "must be an object");
            QumlElement element;
            element.name = require_string(elements[k], "name", ewhere);
            element.kind = require_string(elements[k], "kind", ewhere);
            if (element.kind != "variable" && element.kind != "operation")
                throw SchemaError(ewhere, "kind must be 'variable' or 'operation'");
            element.quantum = quantum_flag(elements[k], ewhere);
            cls.elements.push_back(std::move(element));
        }
        model.classes.push_back(std::move(cls));
    }
    return model;
}

DesignModel parse_design_document(const std::string& path, DesignFormat format) {
    std::string text = read_text_file(path);
    switch (format) {
        case DesignFormat::arch: return parse_arch_text(text);
        case DesignFormat::patterns: return parse_patterns_text(text);
        case DesignFormat::quml: return parse_quml_text(text);
    }
    throw SchemaError(path, "unknown design format");
}

GammaMetrics compute_gamma(const ArchitectureSpec& s) {
    GammaMetrics g;
    g.gamma1 = s.source_lines;
    g.gamma2 = static_cast<int>(s.components.size() + s.connectors.size());
    for (const auto& c : s.components) {
        if (c.quantum) ++g.gamma3;
    }
    for (const auto& c : s.connectors) {
        bool from_q = s.find_component(c.from)->quantum;
        bool to_q = s.find_component(c.to)->quantum;
        if (from_q && to_q) ++g.gamma4;
        else if (from_q || to_q) ++g.gamma5;
    }
    g.gamma6 = g.gamma3 + g.gamma4 + g.gamma5;
    return g;
}

DeltaMetrics compute_delta(const PatternRecord& d) {
    DeltaMetrics m;
    m.delta1 = static_cast<int>(d.patterns.size());
    for (const auto& p : d.patterns) {
        int instances = static_cast<int>(p.instances.size());
        m.delta2[p.type_name] = instances;
        if (p.quantum) {
            ++m.delta3;
            m.delta4[p.type_name] = instances;
        }
    }
    return m;
}

ThetaMetrics compute_theta(const QumlModel& m) {
    ThetaMetrics t;
    for (const auto& cls : m.classes) {
        if (cls.quantum) ++t.theta1;
        for (const auto& e : cls.elements) {
            if (e.quantum) ++t.theta2;
        }
        for (const auto& i : cls.interfaces) {
            if (i.quantum) ++t.theta3;
        }
        for (const auto& a : cls.attributes) {
            if (a.quantum) ++t.theta4;
        }
        for (const auto& mm : cls.methods) {
            if (mm.quantum) ++t.theta5;
        }
    }
    return t;
}

}  // namespace qmetrics
