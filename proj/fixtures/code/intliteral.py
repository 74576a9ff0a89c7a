circuit = QuantumCircuit(3, 2)
circuit.h(0)
circuit.cx(0, 1)
circuit.cx(1, 2)
circuit.measure(0, 0)
circuit.measure(1, 1)
print(circuit)
