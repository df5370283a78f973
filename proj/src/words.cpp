#include "sl2pf/words.hpp"

namespace sl2pf {

namespace {

Side family_side(WordFamily family, int index) {
    bool even = (index % 2) == 0;
    if (family == WordFamily::F) return even ? Side::Upper : Side::Lower;
    return even ? Side::Lower : Side::Upper;
}

void check_alternation(WordFamily family, const std::vector<WordFactor>& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i)
        require(factors[i].side == family_side(family, static_cast<int>(i)), Errc::BadArity,
                "factor sides break the family alternation");
}

}  // namespace

Word Word::from_family(WordFamily family, FieldPtr f, std::vector<Poly> params) {
    require(family != WordFamily::Raw, Errc::FamilyMismatch, "raw words take explicit factors");
    Word w(f);
    w.family_ = family;
    w.factors_.reserve(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        Poly literal = family == WordFamily::F ? params[i] : -params[i];
        w.factors_.push_back({family_side(family, static_cast<int>(i)), std::move(literal)});
    }
    return w;
}

Word Word::raw(FieldPtr f, std::vector<WordFactor> factors) {
    Word w(std::move(f));
    w.family_ = WordFamily::Raw;
    w.factors_ = std::move(factors);
    return w;
}

Word Word::zeros(WordFamily family, FieldPtr f, int arity) {
    std::vector<Poly> params(static_cast<std::size_t>(arity), Poly::zero(f));
    return from_family(family, std::move(f), std::move(params));
}

std::vector<Poly> Word::family_params() const {
    require(family_ != WordFamily::Raw, Errc::FamilyMismatch, "raw word has no family parameters");
    std::vector<Poly> out;
    out.reserve(factors_.size());
    for (const auto& fac : factors_)
        out.push_back(family_ == WordFamily::F ? fac.param : -fac.param);
    return out;
}

bool Word::operator==(const Word& o) const {
    if (family_ != o.family_ || factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].side != o.factors_[i].side || factors_[i].param != o.factors_[i].param)
            return false;
    return true;
}

Mat2 word_eval(const Word& w) {
    Mat2 m = Mat2::identity(w.field_ptr());
    for (const auto& fac : w.factors()) {
        if (fac.side == Side::Upper)
            m.rmul_upper(fac.param);
        else
            m.rmul_lower(fac.param);
    }
    return m;
}

namespace {

std::vector<WordFactor> squash(const std::vector<WordFactor>& factors) {
    std::vector<WordFactor> out;
    for (const auto& fac : factors) {
        if (!out.empty() && out.back().side == fac.side)
            out.back().param = out.back().param + fac.param;
        else
            out.push_back(fac);
    }
    return out;
}

WordFamily letter_of(const std::vector<WordFactor>& factors) {
    return factors.empty() || factors.front().side == Side::Upper ? WordFamily::F : WordFamily::G;
}

}  // namespace

Word word_normalize(const Word& w) {
    if (w.family() != WordFamily::Raw) {
        check_alternation(w.family(), w.factors());
        return w;
    }
    Word out(w.field_ptr());
    out.factors_ = squash(w.factors());
    out.family_ = letter_of(out.factors_);
    return out;
}

Word word_compose(const Word& x, const Word& y) {
    if (x.arity() == 0) return word_normalize(y);
    if (y.arity() == 0) return word_normalize(x);
    // Tagged words must agree on the family letter; raw operands are free and
    // take whatever letter the leading side dictates.
    if (x.family() != WordFamily::Raw && y.family() != WordFamily::Raw)
        require(x.family() == y.family(), Errc::FamilyMismatch,
                "cannot compose words from different families");
    std::vector<WordFactor> cat = x.factors_;
    cat.insert(cat.end(), y.factors_.begin(), y.factors_.end());
    Word out(x.field_ptr());
    out.factors_ = squash(cat);
    out.family_ = letter_of(out.factors_);
    return out;
}

Word word_pad(const Word& w, int target_arity) {
    Word a = word_normalize(w);
    require(target_arity >= a.arity(), Errc::BadArity, "pad target below current arity");
    Poly zero = Poly::zero(a.field_ptr());
    while (a.arity() < target_arity) {
        Side next = a.factors_.empty()
                        ? family_side(a.family(), 0)
                        : flipped(a.factors_.back().side);
        a.factors_.push_back({next, zero});
    }
    return a;
}

Word word_invert(const Word& w) {
    Word out(w.field_ptr());
    out.factors_.reserve(w.factors().size());
    for (std::size_t i = w.factors().size(); i-- > 0;)
        out.factors_.push_back({w.factors()[i].side, -w.factors()[i].param});
    out.family_ = out.factors_.empty() || out.factors_.front().side == Side::Upper
                      ? WordFamily::F
                      : WordFamily::G;
    if (w.family() == WordFamily::Raw) out.family_ = WordFamily::Raw;
    return out;
}

Word word_j_conjugate(const Word& w) {
    Word out(w.field_ptr());
    out.factors_.reserve(w.factors().size());
    for (const auto& fac : w.factors()) out.factors_.push_back({flipped(fac.side), -fac.param});
    switch (w.family()) {
        case WordFamily::F: out.family_ = WordFamily::G; break;
        case WordFamily::G: out.family_ = WordFamily::F; break;
        case WordFamily::Raw: out.family_ = WordFamily::Raw; break;
    }
    return out;
}

Word epsilon_diag_word(FieldPtr f, Fq eps, WordFamily family) {
    require(eps != 0, Errc::ZeroUnit, "diagonal unit must be nonzero");
    const Field& F = *f;
    Fq inv = F.inv(eps);
    std::vector<Poly> params;
    if (family == WordFamily::G) {
        // ((eps-1)/eps, -1, 1-eps, 1/eps)
        params = {Poly::constant(f, F.mul(F.sub(eps, 1), inv)), Poly::constant(f, F.neg(1)),
                  Poly::constant(f, F.sub(1, eps)), Poly::constant(f, inv)};
    } else {
        // (-eps, eps^{-1}-1, 1, eps-1)
        params = {Poly::constant(f, F.neg(eps)), Poly::constant(f, F.sub(inv, 1)),
                  Poly::constant(f, 1), Poly::constant(f, F.sub(eps, 1))};
    }
    return Word::from_family(family, f, std::move(params));
}

Word antidiag_word(FieldPtr f, Fq eps, WordFamily family) {
    require(eps != 0, Errc::ZeroUnit, "antidiagonal unit must be nonzero");
    const Field& F = *f;
    Fq inv = F.inv(eps);
    std::vector<Poly> params;
    if (family == WordFamily::G) {
        // (-1/eps, eps, -1/eps)
        params = {Poly::constant(f, F.neg(inv)), Poly::constant(f, eps),
                  Poly::constant(f, F.neg(inv))};
    } else {
        // (-eps, 1/eps, -eps)
        params = {Poly::constant(f, F.neg(eps)), Poly::constant(f, inv),
                  Poly::constant(f, F.neg(eps))};
    }
    return Word::from_family(family, f, std::move(params));
}

}  // namespace sl2pf
