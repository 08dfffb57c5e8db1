#ifndef GS4_TEXT_INTERNAL_HPP
#define GS4_TEXT_INTERNAL_HPP

#include <string>

#include "gs4/syntax.hpp"

namespace gs4::detail {

// Shared cursor for the formula/sequent grammar and the derivation
// s-expression format layered on top of it.
struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    explicit Cursor(const std::string& t) : text(t) {}

    void skip_ws();
    char peek();                     // 0 at end of input
    bool try_eat(char c);            // consume c if next (after ws)
    void expect(char c);
    bool try_eat_word(const char* w);
    void expect_word(const char* w);
    std::string ident();             // [a-z][a-z0-9]*
    bool at_end();
    [[noreturn]] void fail(const std::string& what);
};

FormulaPtr parse_formula(Cursor& c);
Sequent parse_sequent(Cursor& c);

}  // namespace gs4::detail

#endif  // GS4_TEXT_INTERNAL_HPP
