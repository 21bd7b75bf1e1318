#include "strongpoly/sexpr.hpp"

#include <cctype>

#include "strongpoly/errors.hpp"

namespace strongpoly {

std::string SExp::head() const {
    if (!is_list || items.empty() || items[0].is_list) return {};
    return items[0].atom;
}

namespace {

struct Reader {
    std::string_view s;
    std::size_t i = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line) + ": " + msg);
    }

    void skip() {
        while (i < s.size()) {
            char c = s[i];
            if (c == ';') {
                while (i < s.size() && s[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line;
                ++i;
            } else {
                break;
            }
        }
    }

    SExp read() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        if (s[i] == ')') fail("unexpected ')'");
        if (s[i] == '(') {
            ++i;
            std::vector<SExp> items;
            while (true) {
                skip();
                if (i >= s.size()) fail("missing ')'");
                if (s[i] == ')') {
                    ++i;
                    return SExp::make_list(std::move(items));
                }
                items.push_back(read());
            }
        }
        std::size_t start = i;
        while (i < s.size() && s[i] != '(' && s[i] != ')' && s[i] != ';' &&
               !std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        return SExp::make_atom(std::string(s.substr(start, i - start)));
    }
};

}  // namespace

SExp parse_sexp(std::string_view text) {
    Reader r{text};
    SExp e = r.read();
    r.skip();
    if (r.i != text.size()) r.fail("trailing input after expression");
    return e;
}

std::string print_sexp(const SExp& e) {
    if (!e.is_list) return e.atom;
    std::string out = "(";
    for (std::size_t k = 0; k < e.items.size(); ++k) {
        if (k) out += ' ';
        out += print_sexp(e.items[k]);
    }
    return out + ")";
}

}  // namespace strongpoly
