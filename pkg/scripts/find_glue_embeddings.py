"""Search E8 for root bases of D4+D4 and E6+A2 and print their glue groups.

The output vectors are the constants D4D4_IN_E8 / E6A2_IN_E8 shipped in
enriques_check.lattice.
"""
from enriques_check.lattice import (
    direct_sum, e8, find_root_embedding, root_lattice, saturation_quotient,
)


def main() -> None:
    lat = e8()
    for parts in (("D4", "D4"), ("E6", "A2")):
        target = direct_sum(*(root_lattice(p) for p in parts)).gram
        emb = find_root_embedding(target, lat)
        print("+".join(parts))
        for v in emb:
            print("   ", v)
        print("    glue:", saturation_quotient(lat, emb))


if __name__ == "__main__":
    main()
