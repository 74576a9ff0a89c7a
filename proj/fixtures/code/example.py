simulator = Aer.get_backend('qasm_simulator')
qreg = QuantumRegister(2)
creg = ClassicalRegister(2)
circuit = QuantumCircuit(qreg, creg)
circuit.x(q[1])
circuit.h(q[0])
circuit.h(q[1])
circuit.cx(q[0],q[1])
circuit.h(q[0])
circuit.h(q[1])
for i in range(2):
    circuit.measure(q[1-i], c[i])
job = execute(circuit, simulator)
result = job.result()
counts = result.get_counts(circuit)
print(counts)
