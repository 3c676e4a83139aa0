#pragma once

/// Degree-graded two-sided ideal membership for the abstract B-algebra
/// identities: exact linear algebra over the fraction field of the Laurent
/// ring, producing round-trip-verifiable certificates.
///
/// For a homogeneous p of word-degree d, the degree-d component of the
/// two-sided ideal generated by homogeneous quadratic relations is exactly
/// span{u . r . v : deg u + 2 + deg v = d}, so the decision procedure is
/// sound and complete at the tested degree. Elimination is fraction-free
/// (cross-multiplication with content stripping); the final division happens
/// once, in the emitted certificate coefficients.

#include <cstdint>
#include <optional>
#include <vector>

#include "qpf/hyper.hpp"
#include "qpf/pfaffian.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

/// A reduced fraction of Laurent polynomials.
struct RatFunc {
    LaurentScalar num;
    LaurentScalar den = LaurentScalar::one();

    static RatFunc of(LaurentScalar n, LaurentScalar d);
    static RatFunc scalar(LaurentScalar n) { return of(std::move(n), LaurentScalar::one()); }

    bool is_zero() const { return num.is_zero(); }
    RatFunc operator+(const RatFunc& o) const { return of(num * o.den + o.num * den, den * o.den); }
    RatFunc operator*(const RatFunc& o) const { return of(num * o.num, den * o.den); }
    RatFunc operator*(const LaurentScalar& s) const { return of(num * s, den); }
    RatFunc negated() const {
        RatFunc r = *this;
        r.num.negate();
        return r;
    }
    bool operator==(const RatFunc&) const = default;
};

/// The quadratic block-relation generators over a fixed index universe: one
/// relation (LHS - RHS) per 2m-subset of [1, N].
struct RelationSet {
    int universe = 0;
    int m = 2;
    std::vector<HPoly> relations;
    /// Sorted 2m-subset backing each relation, for reporting.
    std::vector<std::vector<int>> supports;
};

RelationSet relation_generators(int N, int m);

/// One spanning element u . r . v and its fraction-field coefficient.
struct CertTerm {
    HWord left;
    std::size_t relation = 0;
    HWord right;
    RatFunc coeff;
    bool operator==(const CertTerm&) const = default;
};

struct MembershipCertificate {
    int m = 2;  // block size of the words below
    std::vector<CertTerm> terms;
    bool operator==(const MembershipCertificate&) const = default;
};

struct MembershipResult {
    bool member = false;
    MembershipCertificate cert;
    bool operator==(const MembershipResult&) const = default;
};

/// Decide membership of the homogeneous polynomial p in the two-sided ideal
/// spanned by rels at p's own degree. Exposed caps (larger instances are out
/// of budget): d <= 3 at N <= 6 for m = 2, and d = 2 at N <= 8 for m >= 4.
MembershipResult membership(const HPoly& p, const RelationSet& rels);

/// Re-expand sum coeff * (u . r . v) and compare with p exactly.
bool verify_certificate(const HPoly& p, const RelationSet& rels,
                        const MembershipCertificate& cert);

/// lhs = rhs in B: membership of lhs - rhs.
MembershipResult verify_in_B(const BPoly& lhs, const BPoly& rhs, const RelationSet& rels);

/// Lossless view of a pair polynomial as a block polynomial with m = 2.
HPoly to_block_poly(const BPoly& p);

}  // namespace qpf
