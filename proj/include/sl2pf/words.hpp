#pragma once

#include <vector>

#include "sl2pf/mat2.hpp"

namespace sl2pf {

enum class Side { Upper, Lower };

inline Side flipped(Side s) { return s == Side::Upper ? Side::Lower : Side::Upper; }

// One elementary factor m_{1,2} (Upper) or m_{2,1} (Lower); param is the
// literal matrix entry.
struct WordFactor {
    Side side;
    Poly param;
};

enum class WordFamily { F, G, Raw };

// Finite product of elementary matrices. For family F the sides alternate
// starting Upper and the i-th family parameter appears literally; for G they
// alternate starting Lower and factor i carries the negated parameter. Zero
// parameters are kept: arity is part of the meaning.
class Word {
  public:
    explicit Word(FieldPtr f) : field_(std::move(f)), family_(WordFamily::F) {}

    // F_r / G_r from family parameters.
    static Word from_family(WordFamily family, FieldPtr f, std::vector<Poly> params);
    static Word raw(FieldPtr f, std::vector<WordFactor> factors);
    // All-zero parameters at the given arity (evaluates to the identity).
    static Word zeros(WordFamily family, FieldPtr f, int arity);

    WordFamily family() const { return family_; }
    int arity() const { return static_cast<int>(factors_.size()); }
    const std::vector<WordFactor>& factors() const { return factors_; }
    const FieldPtr& field_ptr() const { return field_; }

    // The paper-facing parameters: literal for F, negated for G.
    std::vector<Poly> family_params() const;

    bool operator==(const Word& o) const;

  private:
    friend Word word_normalize(const Word& w);
    friend Word word_compose(const Word& x, const Word& y);
    friend Word word_pad(const Word& w, int target_arity);
    friend Word word_invert(const Word& w);
    friend Word word_j_conjugate(const Word& w);

    FieldPtr field_;
    WordFamily family_;
    std::vector<WordFactor> factors_;
};

Mat2 word_eval(const Word& w);

// Squashes adjacent same-side factors of a raw word and tags the result F or
// G by its leading side. F/G words pass through unchanged.
Word word_normalize(const Word& w);

// Concatenation with a single seam merge when the adjacent factors share a
// side; eval(result) = eval(x) * eval(y). Families must agree (raw words are
// normalized first); an empty word composes with anything.
Word word_compose(const Word& x, const Word& y);

// Appends zero factors continuing the alternation; evaluation unchanged.
Word word_pad(const Word& w, int target_arity);

// Reversed factor order with negated parameters; evaluates to the inverse.
// The family letter follows the leading side of the result (even arities
// swap F <-> G, odd arities keep the letter).
Word word_invert(const Word& w);

// Swaps family F(r) <-> G(r) keeping parameters; eval commutes with
// j_conjugate.
Word word_j_conjugate(const Word& w);

// Arity-4 word evaluating to diag(eps, eps^{-1}).
Word epsilon_diag_word(FieldPtr f, Fq eps, WordFamily family);
// Arity-3 word evaluating to [[0, -eps], [eps^{-1}, 0]].
Word antidiag_word(FieldPtr f, Fq eps, WordFamily family);

}  // namespace sl2pf
