# mixed classical and quantum statements
qr = QuantumRegister(4)
cr = ClassicalRegister(4)
qc = QuantumCircuit(qr, cr)
alias = qc
depth = 2 * 3 + 1
alias.rx(1, qr[0])
alias.crz(depth, qr[0], qr[1])
alias.barrier()
alias.reset(qr[2])
for k in range(4):
    alias.measure(qr[3 - k], cr[k])
total = depth * 2
print(total)
