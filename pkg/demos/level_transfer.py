"""Follow a stratum through a level raise n -> m.

For nested principal levels the index of the deeper group splits into a
part absorbed along the stratum and a fiber count over it; on coset
classes the similitude components merge and the fiber shrinks by
phi(m)/phi(n).  The transfer matrix at the end tabulates, for one group
element, which level-n class each level-m class lands in.
"""

from siegelstrata import (boundary_fiber_count, build_context, euler_phi,
                          hecke_index, hecke_matrix_structure,
                          reduction_fiber_count, strata_count,
                          transfer_degree)
from siegelstrata.hecke import HeckeDatum


def main() -> None:
    print("genus 1, stratum S = {0}:")
    print("  (n, m)    degree  index  fibers  class fibers")
    for n, m in ((3, 6), (3, 9), (4, 8)):
        datum = HeckeDatum(1, n, m)
        deg = transfer_degree(datum)
        idx = hecke_index(datum, (0,))
        bfc = boundary_fiber_count(datum, (0,))
        rfc = reduction_fiber_count(datum, (0,))
        print(f"  ({n}, {m})    {deg:>4}  {idx:>5}  {bfc:>6}  {rfc:>12}")
        base = strata_count(build_context(1, n), 0)
        deep = strata_count(build_context(1, m), 0)
        assert deep == base * rfc
        print(f"          strata: {base} at level {n}, {deep} = {base}*{rfc} "
              f"at level {m}; phi({m})/phi({n}) = "
              f"{euler_phi(m) // euler_phi(n)}")

    print("\ntransfer matrix support, (n, m) = (3, 6), g = identity:")
    st = hecke_matrix_structure(HeckeDatum(1, 3, 6), (0,))
    for i, j, count in st.entries:
        print(f"  level-6 classes over class {j} landing in class {i}: {count}")

    print("\nsame, g = the symplectic form matrix:")
    st = hecke_matrix_structure(HeckeDatum(1, 3, 6), (0,), ((0, 1), (-1, 0)))
    for i, j, count in st.entries:
        print(f"  level-6 classes over class {j} landing in class {i}: {count}")
    print("(right multiplication by g permutes the classes; row and column"
          "\n totals both stay equal to the class fiber size)")


if __name__ == "__main__":
    main()
