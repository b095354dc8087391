#include "gentzen/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gentzen::ord {

std::size_t List::node_count() const {
    std::size_t n = 1;
    for (const auto& c : items_) n += c.node_count();
    return n;
}

std::string_view to_string(Ordering3 o) {
    switch (o) {
        case Ordering3::Less: return "LT";
        case Ordering3::Equal: return "EQ";
        case Ordering3::Greater: return "GT";
    }
    return "??";
}

namespace {

class BracketParser {
public:
    explicit BracketParser(std::string_view text) : text_(text) {}

    List run() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty input", pos_);
        List result = parse_list();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
        return result;
    }

private:
    List parse_list() {
        if (peek() != '[') throw ParseError(describe("expected '['"), pos_);
        ++pos_;
        std::vector<List> items;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            return List{};
        }
        for (;;) {
            skip_ws();
            if (peek() == ',') throw ParseError("misplaced comma", pos_);
            items.push_back(parse_list());
            skip_ws();
            char c = peek();
            if (c == ',') {
                ++pos_;
                skip_ws();
                if (peek() == ']') throw ParseError("trailing comma", pos_ - 1);
                continue;
            }
            if (c == ']') {
                ++pos_;
                return List(std::move(items));
            }
            if (c == '\0') throw ParseError("unbalanced brackets", pos_);
            throw ParseError(describe("expected ',' or ']'"), pos_);
        }
    }

    std::string describe(const char* expectation) const {
        if (pos_ >= text_.size()) return std::string("unbalanced brackets (") + expectation + ")";
        char c = text_[pos_];
        if (c != '[' && c != ']' && c != ',') return std::string("unexpected character '") + c + "'";
        return expectation;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void render_into(const List& a, std::string& out) {
    out += '[';
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i) out += ',';
        render_into(a[i], out);
    }
    out += ']';
}

bool is_natural(const List& a) {
    return std::all_of(a.items().begin(), a.items().end(), [](const List& c) { return c.empty(); });
}

std::string render_term(const List& exponent, std::size_t count) {
    if (exponent.empty()) return std::to_string(count);
    std::string base;
    if (exponent.length() == 1 && exponent[0].empty()) {
        base = "ω";
    } else {
        std::string e = render_cnf(exponent);
        bool compound = e.find_first_of("+^") != std::string::npos || e.find("·") != std::string::npos;
        base = compound ? "ω^(" + e + ")" : "ω^" + e;
    }
    if (count > 1) base += "·" + std::to_string(count);
    return base;
}

void enumerate_exact(std::size_t nodes, std::map<std::size_t, std::vector<List>>& memo);

// Weakly decreasing sequences of ordinals with `budget` nodes in total whose
// first element is at most `bound`.
void sequences(std::size_t budget, const List* bound, std::vector<List>& prefix,
               std::map<std::size_t, std::vector<List>>& memo, std::vector<List>& out) {
    if (budget == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t size = 1; size <= budget; ++size) {
        enumerate_exact(size, memo);
        for (const List& c : memo[size]) {
            if (bound && less(*bound, c)) continue;
            prefix.push_back(c);
            sequences(budget - size, &c, prefix, memo, out);
            prefix.pop_back();
        }
    }
}

void enumerate_exact(std::size_t nodes, std::map<std::size_t, std::vector<List>>& memo) {
    if (memo.count(nodes)) return;
    std::vector<List> result;
    if (nodes == 1) {
        result.emplace_back();
    } else {
        std::vector<List> prefix;
        sequences(nodes - 1, nullptr, prefix, memo, result);
    }
    memo[nodes] = std::move(result);
}

}  // namespace

List parse_ordinal(std::string_view text) { return BracketParser(text).run(); }

std::string render_brackets(const List& a) {
    std::string out;
    render_into(a, out);
    return out;
}

Ordering3 compare(const List& a, const List& b) {
    std::size_t common = std::min(a.length(), b.length());
    for (std::size_t i = 0; i < common; ++i) {
        Ordering3 c = compare(a[i], b[i]);
        if (c != Ordering3::Equal) return c;
    }
    if (a.length() == b.length()) return Ordering3::Equal;
    return a.length() < b.length() ? Ordering3::Less : Ordering3::Greater;
}

bool is_ordinal(const List& a) {
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (!is_ordinal(a[i])) return false;
        if (i + 1 < a.length() && less(a[i], a[i + 1])) return false;
    }
    return true;
}

std::size_t height(const List& a) {
    std::size_t h = 1;
    for (const List* p = &a; !p->empty(); p = &(*p)[0]) ++h;
    return h;
}

std::string render_cnf(const List& a) {
    if (a.empty()) return "0";
    if (is_natural(a)) return std::to_string(a.length());
    std::string out;
    std::size_t i = 0;
    while (i < a.length()) {
        std::size_t j = i;
        while (j < a.length() && a[j] == a[i]) ++j;
        if (!out.empty()) out += '+';
        out += render_term(a[i], j - i);
        i = j;
    }
    return out;
}

List from_nat(std::size_t n) { return List(std::vector<List>(n)); }

List successor(const List& a) {
    std::vector<List> items = a.items();
    items.emplace_back();
    return List(std::move(items));
}

List natural_sum(const List& a, const List& b) {
    std::vector<List> items;
    items.reserve(a.length() + b.length());
    std::merge(a.items().begin(), a.items().end(), b.items().begin(), b.items().end(),
               std::back_inserter(items), [](const List& x, const List& y) { return less(y, x); });
    return List(std::move(items));
}

List omega_power(const List& a) { return List(std::vector<List>{a}); }

const List& max(const List& a, const List& b) { return less(a, b) ? b : a; }

std::vector<List> enumerate_ordinals(std::size_t max_nodes) {
    std::map<std::size_t, std::vector<List>> memo;
    std::vector<List> all;
    for (std::size_t n = 1; n <= max_nodes; ++n) {
        enumerate_exact(n, memo);
        all.insert(all.end(), memo[n].begin(), memo[n].end());
    }
    std::sort(all.begin(), all.end(), less);
    return all;
}

}  // namespace gentzen::ord
