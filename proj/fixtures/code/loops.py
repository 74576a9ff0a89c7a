q = QuantumRegister(3)
c = ClassicalRegister(3)
circuit = QuantumCircuit(q, c)
for i in range(3):
    circuit.h(q[i])
for i in range(2):
    for j in range(2):
        circuit.cx(q[j], q[j + 1])
circuit.measure_all()
print('ok')
