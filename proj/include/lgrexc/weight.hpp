#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lgrexc {

/// A weakly decreasing integer sequence of fixed length; the dominant
/// weights of GL(k). Young diagrams are weights with nonnegative parts.
/// Equality and ordering compare after right-padding with zeros, so a
/// diagram embeds into any larger rank without changing identity.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> parts);

    static Weight zero(std::size_t len);

    std::size_t length() const { return parts_.size(); }
    const std::vector<int>& parts() const { return parts_; }

    /// Entry at 0-based index i; zero beyond the stored length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool is_diagram() const;
    bool is_zero() const;

    /// Box count; meaningful for diagrams, defined for any weight.
    long long size() const;

    /// Copy extended with zeros to length len (len >= length()).
    Weight padded(std::size_t len) const;
    /// Copy with trailing zeros stripped.
    Weight normalized() const;

    friend bool operator==(const Weight& a, const Weight& b);
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

private:
    std::vector<int> parts_;
};

bool includes(const Weight& inner, const Weight& outer);  // inner_i <= outer_i
Weight negate(const Weight& w);                           // (-w_k, ..., -w_1)
Weight twist(const Weight& w, int t);                     // every part + t

/// Transpose of a Young diagram: column lengths. Involution up to
/// trailing-zero normalization.
Weight transpose(const Weight& lam);

struct DiagramStats {
    int h = 0;  // nonzero rows
    int w = 0;  // first part
    int t = 0;  // rows of maximal width
};
DiagramStats diagram_stats(const Weight& lam);

/// All diagrams fitting in an h x w box, sorted by (size, lexicographic):
/// a linear extension of the inclusion order. C(h+w, h) elements.
std::vector<Weight> enumerate_block(int h, int w);

bool in_block(const Weight& lam, int h, int w);

// Binary words over {0,1}; a word of length h+w with h zeros encodes a
// diagram in the h x w box (zero positions 1 <= l_1 < ... < l_h give
// (l_h - h, ..., l_1 - 1)).
Weight word_to_diagram(const std::string& word);
std::string diagram_to_word(const Weight& lam, int h, int w);

/// a_0...a_m -> (1-a_m) a_0 ... a_{m-1}; generates a cyclic action of
/// order dividing twice the word length.
std::string cyclic_step(const std::string& word);

/// The block-hopping step on diagrams: append a zero row when lam_1 < w,
/// otherwise drop the first row and add one box to every remaining row.
/// Matches cyclic_step through the word bijection.
Weight lambda_prime(const Weight& lam, int h, int w);

/// Truncation data of a diagram with lam_1 = w in the h x w block:
/// diagrams lam^(1) .. lam^(w) together with the box counts
/// nu_i = |lam| - |lam^(i)| (strictly increasing).
struct StairData {
    Weight lambda;
    int h = 0;
    int w = 0;
    Weight lambda_prime;
    std::vector<Weight> truncations;
    std::vector<int> nus;
};
StairData staircase_truncations(const Weight& lam, int h, int w);

// Serialization: "3,3,1"; the empty diagram prints as "0".
std::string to_string(const Weight& w);
Weight parse_weight(const std::string& text);

}  // namespace lgrexc
