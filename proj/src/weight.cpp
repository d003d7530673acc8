#include "lgrexc/weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lgrexc {

Weight::Weight(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Weight: parts must be weakly decreasing");
    }
}

Weight Weight::zero(std::size_t len) { return Weight(std::vector<int>(len, 0)); }

bool Weight::is_diagram() const { return parts_.empty() || parts_.back() >= 0; }

bool Weight::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

long long Weight::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Weight Weight::padded(std::size_t len) const {
    if (len < parts_.size())
        throw std::invalid_argument("Weight::padded: target length too small");
    if (len > parts_.size() && !parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("Weight::padded: negative tail cannot be zero-padded");
    std::vector<int> p = parts_;
    p.resize(len, 0);
    return Weight(std::move(p));
}

Weight Weight::normalized() const {
    std::vector<int> p = parts_;
    while (!p.empty() && p.back() == 0) p.pop_back();
    Weight w;
    w.parts_ = std::move(p);
    return w;
}

bool operator==(const Weight& a, const Weight& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.part(i) != b.part(i))
            return a.part(i) <=> b.part(i);
    }
    return std::strong_ordering::equal;
}

bool includes(const Weight& inner, const Weight& outer) {
    const std::size_t n = std::max(inner.length(), outer.length());
    for (std::size_t i = 0; i < n; ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

Weight negate(const Weight& w) {
    std::vector<int> p(w.parts().rbegin(), w.parts().rend());
    for (int& x : p) x = -x;
    return Weight(std::move(p));
}

Weight twist(const Weight& w, int t) {
    std::vector<int> p = w.parts();
    for (int& x : p) x += t;
    return Weight(std::move(p));
}

Weight transpose(const Weight& lam) {
    if (!lam.is_diagram())
        throw std::invalid_argument("transpose: argument must be a Young diagram");
    const int width = lam.part(0);
    std::vector<int> cols(static_cast<std::size_t>(width), 0);
    for (int i = 1; i <= width; ++i) {
        int count = 0;
        for (std::size_t j = 0; j < lam.length(); ++j)
            if (lam.part(j) >= i) ++count;
        cols[static_cast<std::size_t>(i - 1)] = count;
    }
    return Weight(std::move(cols));
}

DiagramStats diagram_stats(const Weight& lam) {
    if (!lam.is_diagram())
        throw std::invalid_argument("diagram_stats: argument must be a Young diagram");
    DiagramStats s;
    s.w = lam.part(0);
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (lam.part(i) > 0) ++s.h;
        if (lam.part(i) == s.w && s.w > 0) ++s.t;
    }
    if (s.w == 0) s.t = 0;
    return s;
}

namespace {

void enumerate_block_rec(int h, int w, int maxw, std::vector<int>& acc,
                         std::vector<Weight>& out) {
    if (h == 0) {
        std::vector<int> p = acc;
        while (!p.empty() && p.back() == 0) p.pop_back();
        out.push_back(Weight(std::move(p)));
        return;
    }
    for (int v = maxw; v >= 0; --v) {
        acc.push_back(v);
        enumerate_block_rec(h - 1, w, v, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Weight> enumerate_block(int h, int w) {
    if (h < 0 || w < 0)
        throw std::invalid_argument("enumerate_block: negative box shape");
    std::vector<Weight> out;
    std::vector<int> acc;
    enumerate_block_rec(h, w, w, acc, out);
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool in_block(const Weight& lam, int h, int w) {
    if (!lam.is_diagram()) return false;
    if (lam.part(0) > w) return false;
    for (std::size_t i = static_cast<std::size_t>(h); i < lam.length(); ++i)
        if (lam.part(i) != 0) return false;
    return true;
}

Weight word_to_diagram(const std::string& word) {
    if (word.empty()) throw std::invalid_argument("word_to_diagram: empty word");
    std::vector<int> zeros;  // 1-based positions
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == '0')
            zeros.push_back(static_cast<int>(i) + 1);
        else if (word[i] != '1')
            throw std::invalid_argument("word_to_diagram: word must be over {0,1}");
    }
    const int h = static_cast<int>(zeros.size());
    std::vector<int> parts;
    for (int j = h; j >= 1; --j) parts.push_back(zeros[static_cast<std::size_t>(j - 1)] - j);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Weight(std::move(parts));
}

std::string diagram_to_word(const Weight& lam, int h, int w) {
    if (!in_block(lam, h, w))
        throw std::invalid_argument("diagram_to_word: diagram does not fit the block");
    std::string word(static_cast<std::size_t>(h + w), '1');
    for (int j = 1; j <= h; ++j) {
        const int l_j = lam.part(static_cast<std::size_t>(h - j)) + j;  // position of j-th zero
        word[static_cast<std::size_t>(l_j - 1)] = '0';
    }
    return word;
}

std::string cyclic_step(const std::string& word) {
    if (word.empty()) throw std::invalid_argument("cyclic_step: empty word");
    std::string out;
    out.reserve(word.size());
    out.push_back(word.back() == '0' ? '1' : '0');
    out.append(word.begin(), word.end() - 1);
    return out;
}

Weight lambda_prime(const Weight& lam, int h, int w) {
    if (!in_block(lam, h, w))
        throw std::invalid_argument("lambda_prime: diagram does not fit the block");
    if (lam.part(0) < w) {
        // result lives in the (h+1) x (w-1) block
        return lam.padded(static_cast<std::size_t>(h) + 1).normalized();
    }
    std::vector<int> p;
    for (int i = 1; i < h; ++i) p.push_back(lam.part(static_cast<std::size_t>(i)) + 1);
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Weight(std::move(p));
}

StairData staircase_truncations(const Weight& lam, int h, int w) {
    if (!in_block(lam, h, w))
        throw std::invalid_argument("staircase_truncations: diagram does not fit the block");
    if (lam.part(0) != w)
        throw std::invalid_argument("staircase_truncations: first row must equal the block width");
    StairData d;
    d.lambda = lam.normalized();
    d.h = h;
    d.w = w;
    d.lambda_prime = lambda_prime(lam, h, w);
    for (int i = 1; i <= w; ++i) {
        int j = 0;  // largest 1-based index with lam_j > w - i; j >= 1 since lam_1 = w
        for (int r = 1; r <= h; ++r)
            if (lam.part(static_cast<std::size_t>(r - 1)) > w - i) j = r;
        std::vector<int> p;
        for (int r = 2; r <= j; ++r) p.push_back(lam.part(static_cast<std::size_t>(r - 1)) - 1);
        p.push_back(w - i);
        for (int r = j + 1; r <= h; ++r) p.push_back(lam.part(static_cast<std::size_t>(r - 1)));
        while (!p.empty() && p.back() == 0) p.pop_back();
        Weight trunc(std::move(p));
        d.nus.push_back(static_cast<int>(lam.size() - trunc.size()));
        d.truncations.push_back(std::move(trunc));
    }
    return d;
}

std::string to_string(const Weight& w) {
    if (w.length() == 0) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) os << ',';
        os << w.part(i);
    }
    return os.str();
}

Weight parse_weight(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_weight: bad entry '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("parse_weight: bad entry '" + tok + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("parse_weight: empty input");
    return Weight(std::move(parts));  // ctor validates monotonicity
}

}  // namespace lgrexc
