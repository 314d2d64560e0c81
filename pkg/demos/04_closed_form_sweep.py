"""The closed-form K0 of exchange systems, driven by the Euclidean algorithm.

For N and M self-loops with the exchange gluing, K0 decomposes into M-2
copies of Z/(N-1), N-2 copies of Z/(M-1), and a two-term tail Z/d + Z/(c*g)
where d = gcd(M-1, N-1), g = (M-1)(M+N-1), and c is the continuant of the
Euclidean quotients past the first.  This script prints the Euclid traces,
then sweeps every pair up to (8, 8) comparing the closed form against the
Smith-normal-form pipeline.
"""

from cktiles import (
    closed_form_kgroups,
    continuant,
    euclid_trace,
    verify_closed_form,
)

print("Euclid trace for m = 17, n = 5:")
trace = euclid_trace(17, 5)
print("  quotients:", trace.quotients)
print("  remainders:", trace.remainders)
print("  gcd:", trace.gcd)
print("  continuant of quotients after the first:", continuant(trace.quotients[1:]))

print("\nclosed form for (3, 6):")
result = closed_form_kgroups(3, 6)
print("  raw summand orders:", result.summands)
print("  canonical form:", result.canonical)
print("  g = (M-1)(M+N-1) =", result.g)

print("\nsweep: closed form vs pipeline")
print(f"{'N':>3} {'M':>3}  {'K0':<40} agree")
for n in range(2, 9):
    for m in range(n, 9):
        comparison = verify_closed_form(n, m)
        print(f"{n:>3} {m:>3}  {str(comparison.computed.k0):<40} {comparison.agree}")

print("\nthe (2, M) row collapses to a single cyclic group of order M^2 - 1:")
for m in range(2, 11):
    print(f"  (2,{m:>2}): {closed_form_kgroups(2, m).canonical}")
