q = QuantumRegister(2)
c = ClassicalRegister(2)
circuit = QuantumCircuit(q, c)
def prepare(n):
    circuit.h(q[0])
    circuit.cx(q[0], q[1])
def readout(n):
    circuit.measure(q, c)
prepare(1)
prepare(2)
readout(3)
print('ok')
