#pragma once

// Ordinals below epsilon-zero written as nested lists.
//
// A list is either [] or a finite sequence of lists.  A list is an ordinal
// when every constituent is an ordinal and the constituents are weakly
// decreasing.  The list [a1, ..., an] denotes w^a1 + ... + w^an.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gentzen::ord {

class List {
public:
    List() = default;
    explicit List(std::vector<List> items) : items_(std::move(items)) {}

    const std::vector<List>& items() const { return items_; }
    std::size_t length() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const List& operator[](std::size_t i) const { return items_[i]; }

    // Number of list nodes, counting this one.
    std::size_t node_count() const;

    friend bool operator==(const List&, const List&) = default;

private:
    std::vector<List> items_;
};

enum class Ordering3 { Less, Equal, Greater };

std::string_view to_string(Ordering3 o);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Bracket text: '[', ']', ',' and ASCII whitespace; no trailing commas.
List parse_ordinal(std::string_view text);
std::string render_brackets(const List& a);

// Lexicographic order: a constituent-wise prefix is below the longer list,
// otherwise the first differing constituent decides.  Total on all lists,
// meaningful as the ordinal order only on ordinals.
Ordering3 compare(const List& a, const List& b);

inline bool less(const List& a, const List& b) { return compare(a, b) == Ordering3::Less; }

bool is_ordinal(const List& a);

// Opening brackets before the first closing one.
std::size_t height(const List& a);

// Cantor normal form, e.g. "w^2+w.3+1" spelled with the Unicode omega and
// middle dot.
std::string render_cnf(const List& a);

List from_nat(std::size_t n);
List successor(const List& a);
List natural_sum(const List& a, const List& b);
List omega_power(const List& a);

const List& max(const List& a, const List& b);

// Every ordinal with at most max_nodes list nodes, in increasing order.
std::vector<List> enumerate_ordinals(std::size_t max_nodes);

}  // namespace gentzen::ord
