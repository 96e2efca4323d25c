"""Embed the curves R0..R9 of configuration d1 into E10.

R1..R9 (the E~8 fiber) go to the first nine vectors of e10_basis, matching
the E~8 subdiagram of the E10 diagram. R0 must meet R2 and R8 once and miss
R1, R3..R7, R9; its pairing with the tenth basis vector is free, and we scan
it until the solution is a root.
"""
from enriques_check import catalog
from enriques_check.e10 import e10_lattice
from enriques_check.lattice import profile, sublattice_index
from enriques_check.linalg import solve_exact


def main() -> None:
    lat = e10_lattice()
    for t in range(-50, 51):
        sol = solve_exact(lat.gram, [0, 1, 0, 0, 0, 0, 0, 1, 0, t])
        r0 = tuple(int(x) for x in sol)
        if lat.norm(r0) == -2:
            break
    else:
        raise SystemExit("no root found")
    vecs = [r0] + [tuple(int(i == j) for j in range(10)) for i in range(9)]
    assert lat.gram_of(vecs) == catalog.d1().gram
    print("R0 =", r0, "(free pairing", t, ")")
    print("Gram profile:", profile(lat.sublattice(vecs)))
    print("index in E10:", sublattice_index(lat, vecs))


if __name__ == "__main__":
    main()
