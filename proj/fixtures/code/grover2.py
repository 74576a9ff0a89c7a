q = QuantumRegister(2)
c = ClassicalRegister(2)
circuit = QuantumCircuit(q, c)
shots = 1024
circuit.h(q[0])
circuit.h(q[1])
circuit.cz(q[0], q[1])
circuit.h(q[0])
circuit.h(q[1])
circuit.x(q[0])
circuit.x(q[1])
circuit.cz(q[0], q[1])
circuit.x(q[0])
circuit.x(q[1])
circuit.h(q[0])
circuit.h(q[1])
if shots == 1024:
    circuit.measure(q, c)
print(shots)
