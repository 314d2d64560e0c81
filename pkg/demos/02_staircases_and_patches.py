"""Transitivity by staircase search, and patch extension under the diagonal property.

The tiling shift is transitive exactly when the sum of the transition
matrices is irreducible.  A direct certificate is a staircase: a chain of
Right/Down moves from one tile to (the corner of) another, with at least one
move of each kind.  This script finds staircases in the exchange system on
two and three self-loops, shows a system that is not transitive, and grows a
patch to illustrate that a north plus east neighbor pin down the corner tile.
"""

from cktiles import (
    PavedPatch,
    canonical_system,
    check_diagonal_property,
    exchange_system,
    extend_patch,
    find_transitivity_witness,
    is_transitive_matrix,
    is_transitive_search,
)

system = exchange_system(2, 3)
print("system:", system)
print("diagonal property:", bool(check_diagonal_property(system)))
print("transitive (matrix criterion):", is_transitive_matrix(system))
print("transitive (exhaustive staircase search):", is_transitive_search(system))

start, target = system.tiles[0], system.tiles[-1]
witness = find_transitivity_witness(system, start, target, max_steps=6)
print(f"\nstaircase from tile 0 to tile {len(system.tiles) - 1}:")
print("  moves:", list(witness.moves))
print("  positions:", witness.positions())
for move, tile in zip(witness.moves, witness.tiles):
    print(f"  {move:>5}: {tile}")

identity = [[1, 0], [0, 1]]
frozen = canonical_system(identity, identity)
print("\nidentity pair is not transitive:", is_transitive_matrix(frozen))
blocked = find_transitivity_witness(frozen, frozen.tiles[0], frozen.tiles[1], 64)
print("witness across components:", blocked)

# grow an L-shaped patch; the vacancy with north + east neighbors has at most
# one completion, which is what makes configurations diagonal-determined
patch = PavedPatch.empty().with_tile((0, 1), system.tiles[1])
patch = patch.with_tile((1, 1), extend_patch(system, patch, (1, 1))[0])
patch = patch.with_tile((1, 0), extend_patch(system, patch, (1, 0))[0])
corner = extend_patch(system, patch, (0, 0))
print("\ncandidates for the corner cell:", corner)
patch = patch.with_tile((0, 0), corner[0])
print("patch is paved and connected:", patch.is_paved(), patch.is_connected())
