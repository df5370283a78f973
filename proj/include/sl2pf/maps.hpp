#pragma once

#include <array>

#include "sl2pf/mat2.hpp"

namespace sl2pf {

// Psi(m1, m2, m3) = [[1 + m1 m2 m3, m1^2 m3], [-m2^2 m3, 1 - m1 m2 m3]];
// always unipotent with determinant 1.
Mat2 psi_eval(const Poly& m1, const Poly& m2, const Poly& m3);

// Factors a unipotent M in SL2(A) through psi_eval: m3 is gcd(b, c) scaled by
// the unit that makes b/m3 a square and c/m3 the negative of one.
struct PsiTriple {
    Poly m1, m2, m3;
};
PsiTriple psi_factor(const Mat2& m);

// Gamma(m1..m4): the three-block product with the trailing [[0,-1],[1,0]].
Mat2 gamma_eval(const Poly& m1, const Poly& m2, const Poly& m3, const Poly& m4);

// Parameters (a, b, c, d) with alpha * alpha^T = Gamma(a, b, c, d) for
// alpha = [[a,b],[c,d]] in SL2(A).
std::array<Poly, 4> gamma_factor(const Mat2& alpha);

// Quintuple (a, b, c, d, e) indexing the matrix set M_Lambda; valid when
// M1 = [[1+ae, be^2], [c, 1+de]] has determinant 1.
struct Quintuple {
    Poly a, b, c, d, e;

    static Quintuple zeros(FieldPtr f);
    const FieldPtr& field_ptr() const { return a.field_ptr(); }
    bool operator==(const Quintuple& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d && e == o.e;
    }
};

Mat2 lambda_m1(const Quintuple& t);
Mat2 lambda_m2(const Quintuple& t);
bool quintuple_valid(const Quintuple& t);
void require_quintuple(const Quintuple& t, const char* what);

// Lambda(t) on the det-1 locus, as the division-free product M1 * M2;
// quintuples violating det M1 = 1 are rejected.
Mat2 lambda_eval(const Quintuple& t);
// Lambda^T(t) = J Lambda(t) J^{-1}.
Mat2 lambda_t_eval(const Quintuple& t);

// The extraction M_Lambda -> A^5 is the identity on the defining quintuple.
inline std::array<Poly, 5> lambda_from_quintuple(const Quintuple& t) {
    return {t.a, t.b, t.c, t.d, t.e};
}

// Quintuple of the inverse: lambda_eval(inverse) = lambda_eval(t)^{-1}.
Quintuple quintuple_inverse(const Quintuple& t);

}  // namespace sl2pf
