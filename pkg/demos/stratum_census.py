"""Count boundary strata two ways: closed form and literal enumeration.

The closed form multiplies group orders and similitude contributions; the
enumeration builds the ambient finite symplectic similitude group and the
integral-parabolic image from generator matrices and counts cosets.  The
two must agree, and for the smallest case the orbit partition itself is
printed.
"""

from siegelstrata import (build_context, double_coset_count,
                          double_coset_count_bruteforce, strata_count,
                          strata_count_bruteforce)
from siegelstrata.strata import strata_orbit_partition


def main() -> None:
    print("genus 1, stratum r = 0 (cusps of the modular curve of level n):")
    print("  n   closed form   enumeration")
    for n in (3, 4, 5, 6, 8, 9):
        formula = strata_count(build_context(1, n), 0)
        brute = strata_count_bruteforce(1, n, 0)
        marker = "" if formula == brute else "   MISMATCH"
        print(f"  {n}   {formula:>11}   {brute:>11}{marker}")

    print("\ngenus 1, n = 3: the four coset orbits, by size:")
    partition = strata_orbit_partition(1, 3, 0)
    for rep, size in sorted(partition.items()):
        print(f"  orbit of {rep}: {size} elements")

    print("\ngenus 2, n = 3 (ambient group order 103680):")
    ctx = build_context(2, 3)
    for r in (0, 1):
        formula = strata_count(ctx, r)
        brute = strata_count_bruteforce(2, 3, r)
        print(f"  r = {r}: closed form {formula}, enumeration {brute}")

    count = double_coset_count(ctx, 0, (0, 1))
    brute = double_coset_count_bruteforce(2, 3, 0, (0, 1))
    print(f"  refinement S = (0, 1) over r = 0: card(I_S) = {count} "
          f"(enumeration: {brute})")


if __name__ == "__main__":
    main()
