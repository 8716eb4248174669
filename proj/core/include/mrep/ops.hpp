#pragma once

#include "mrep/limits.hpp"
#include "mrep/representations.hpp"

#include <span>
#include <vector>

namespace mrep {

// Evaluation. 0^0 is 1: a zero exponent means the factor is absent.
// Throws DimensionMismatch when alpha has the wrong length and
// AlphaOutOfRange when a factor leaves [0,1] ([-1,1] for ZRep).
Point evaluate(const MRep& rep, std::span<const Rational> alpha);
Point evaluate(const CRep& rep, std::span<const Rational> alpha);
Point evaluate(const ZRep& rep, std::span<const Rational> alpha);

/// Chain form <v_n, [v_1 - v_2, ..., v_{n-1} - v_n], L_{n-1}>_M of an
/// arbitrary point list, in O(nd).
MRep chain_from_points(const VRep& points);

/// Inverse of chain_from_points: v_n = s, v_i = v_{i+1} + B(:,i).
/// Throws NotChainForm.
VRep chain_vertices(const MRep& chain);

/// Canonical factor vector of a chain form: with k the largest index such
/// that alpha_k = 0 (first index if none), every entry below k is zeroed.
/// The evaluated point is unchanged.
std::vector<Rational> canonical_alpha(std::span<const Rational> alpha, const MRep& chain);

/// Points containing every vertex, sorted lexicographically without
/// duplicates. MRep/CRep evaluate alpha in {0,1}^p (chain forms use the
/// n canonical corners only), ZRep evaluates alpha in {-1,1}^p, VRep just
/// deduplicates. Throws CapExceeded when p > limits.max_factors.
VRep candidate_vertices(const MRep& rep, const Limits& limits = {});
VRep candidate_vertices(const CRep& rep, const Limits& limits = {});
VRep candidate_vertices(const ZRep& rep, const Limits& limits = {});
VRep candidate_vertices(const VRep& rep, const Limits& limits = {});
VRep candidate_vertices(const Representation& rep, const Limits& limits = {});

// Linear maps keep the exponent structure untouched.
MRep linear_map(const Matrix& m, const MRep& rep);
CRep linear_map(const Matrix& m, const CRep& rep);
ZRep linear_map(const Matrix& m, const ZRep& rep);
VRep linear_map(const Matrix& m, const VRep& rep);

/// <s1 + s2, [B1, B2], [[E1, O], [O, E2]]>_M.
MRep minkowski_sum(const MRep& a, const MRep& b);

/// <c1 + c2, [G1, G2], [[E1, O], [O, E2]]>_Z.
ZRep minkowski_sum(const ZRep& a, const ZRep& b);

/// conv(P1, P2) = <s2, [B2, -B2, B1, s1 - s2], E>_M with
///   E = [[E2, E2, O,  O],
///        [O,  O,  E1, O],
///        [O,  J,  J,  1]].
/// The operand with fewer basis vectors takes the P2 role, so the result
/// has min(h1 + 2 h2, h2 + 2 h1) + 1 basis vectors.
MRep convex_hull(const MRep& a, const MRep& b);

/// Links two chains: the result starts at s1, walks P1's chain to e1, steps
/// to s2 and walks P2's chain to e2. h = h1 + h2 + 1, O(d) new scalars.
CRep convex_hull(const CRep& a, const CRep& b);

/// conv via the [-1,1] mixing factor:
///   <(c1 + c2)/2, 1/2 [c1 - c2, G1, G1, G2, -G2], E>_Z with
///   E = [[O, E1, E1, O,  O ],
///        [O, O,  O,  E2, E2],
///        [1, O,  J,  O,  J ]].
ZRep convex_hull(const ZRep& a, const ZRep& b);

/// Candidate vertices (optionally hull-filtered by the oracle) fed back
/// through chain_from_points. The represented set is unchanged.
MRep to_chain_form(const MRep& rep, bool filter_hull, const Limits& limits = {});

/// Throws NotChainForm.
CRep to_crep(const MRep& chain);
MRep to_mrep(const CRep& rep);

/// Stored scalars: points and basis columns count d each, exponents count
/// ExponentMatrix::storage_size(). A chain-form MRep with h >= 1 therefore
/// costs (h + 1) d + 2 and a CRep (h + 2) d.
std::size_t representation_size(const MRep& rep);
std::size_t representation_size(const CRep& rep);
std::size_t representation_size(const ZRep& rep);
std::size_t representation_size(const VRep& rep);
std::size_t representation_size(const Representation& rep);

}  // namespace mrep
