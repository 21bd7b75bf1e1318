#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace strongpoly {

/// Parsed s-expression: an atom or a list.
struct SExp {
    bool is_list = false;
    std::string atom;
    std::vector<SExp> items;

    static SExp make_atom(std::string a) { return {false, std::move(a), {}}; }
    static SExp make_list(std::vector<SExp> xs) { return {true, {}, std::move(xs)}; }

    bool is_atom(std::string_view a) const { return !is_list && atom == a; }
    /// Head atom of a non-empty list, "" otherwise.
    std::string head() const;

    friend bool operator==(const SExp&, const SExp&) = default;
};

/// Exactly one expression; ';' starts a comment running to end of line.
SExp parse_sexp(std::string_view text);
std::string print_sexp(const SExp& e);

}  // namespace strongpoly
