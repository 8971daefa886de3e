"""Walk through the smallest instance (family II, q = 3, i = 2) step by step."""

from negaconv.convolutional import ConvolutionalCode, free_distance_exact, hermitian_dual
from negaconv.families import family_II


def main():
    inst = family_II(3, 2)
    for name in ("C2", "C1", "C0"):
        code, d = inst.codes[name], inst.distances[name]
        print(f"{name}: Z={code.Z.residues} [n={code.n}, k={code.k}, d={d.value}] ({d.method})")
    print("G(D) coefficients:")
    for j, m in enumerate(inst.G.mats):
        print(f"  D^{j}:", m.tolist())
    dual = hermitian_dual(inst.G)
    print("dual row degrees:", dual.matrix.row_degrees)
    res = free_distance_exact(ConvolutionalCode(dual.matrix))
    print(f"dual free distance {res.value} over {res.states} states; word {res.codeword}")
    print(inst.classical_text(), "status", inst.status)
    print("certificate", "PASS" if inst.certificate.passed else "FAIL")


if __name__ == "__main__":
    main()
