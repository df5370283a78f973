#pragma once

#include "sl2pf/maps.hpp"
#include "sl2pf/words.hpp"

namespace sl2pf {

// Nine-slot factorization [G9 | Lambda^T | G4 | Lambda | F11 | Lambda | F4 |
// Lambda^T | G4]; the flattened parameter vector has exactly 52 entries
// (9 + 5 + 4 + 5 + 11 + 5 + 4 + 5 + 4).
struct Certificate {
    Word g9;
    Quintuple lambda_t_front;
    Word g4_front;
    Quintuple lambda_front;
    Word f11;
    Quintuple lambda_back;
    Word f4;
    Quintuple lambda_t_back;
    Word g4_back;

    static Certificate identity(FieldPtr f);
    const FieldPtr& field_ptr() const { return g9.field_ptr(); }
    bool operator==(const Certificate& o) const;
};

// Arity/family/quintuple validation; ArityMismatch or QuintupleNotSL2.
void validate_certificate(const Certificate& cert);

// Product of the nine slot evaluations, in order.
Mat2 omega_eval(const Certificate& cert);

// Slot order [9 | 5 | 4 | 5 | 11 | 5 | 4 | 5 | 4]; round-trip identity with
// unflatten.
std::vector<Poly> flatten(const Certificate& cert);
Certificate unflatten(FieldPtr f, const std::vector<Poly>& params);

}  // namespace sl2pf
