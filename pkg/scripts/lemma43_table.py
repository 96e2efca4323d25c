"""Print, for every fiber type, how many legal fixed loci there are and their Euler numbers.

Counts are given both as labelled star sets and up to diagram symmetry.
"""
from enriques_check import catalog
from enriques_check.diagram import euler_number
from enriques_check.fixed_locus import euler_of, up_to_symmetry, valid_assignments


def main() -> None:
    print(f"{'type':<6} {'e(F)':>4} {'labelled':>8} {'orbits':>6}  values  min/max stars")
    for name in list(catalog.FIBER_TYPES) + ["D~5"]:
        d = catalog.get(name)
        assigns = valid_assignments(d)
        values = sorted({euler_of(a, d) for a in assigns})
        stars = [len(a.stars) for a in assigns]
        span = f"{min(stars)}/{max(stars)}" if stars else "-"
        print(f"{name:<6} {euler_number(d):>4} {len(assigns):>8} {len(up_to_symmetry(d, assigns)):>6}  {values}  {span}")


if __name__ == "__main__":
    main()
