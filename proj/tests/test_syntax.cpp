#include <doctest.h>

#include <random>

#include "gs4/syntax.hpp"
#include "test_util.hpp"

using namespace gs4;
using namespace gs4::test;

TEST_CASE("atom dual is a fixpoint-free involution") {
    Atom a = atom_from_text("a");
    CHECK(dual_of(a) != a);
    CHECK(dual_of(dual_of(a)) == a);
    CHECK(atom_from_text("~~a") == a);
    CHECK(atom_text(atom_from_text("~a")) == "~a");
}

TEST_CASE("negate dualizes atoms and swaps connectives") {
    CHECK(print_formula(negate(fm("x:a"))) == "x:~a");
    CHECK(equal(negate(fm("(x:a | y:b)")), fm("(x:~a & y:~b)")));
    FormulaPtr f = fm("(x:a & (y:b | z:~a))");
    CHECK(equal(negate(negate(f)), f));
}

TEST_CASE("negate involution on random formulas") {
    std::mt19937_64 rng(11);
    unsigned k = 0;
    for (int i = 0; i < 50; ++i) {
        FormulaPtr f = random_formula(rng, 4, "sa", k);
        CHECK(equal(negate(negate(f)), f));
        CHECK(names_of(f) == names_of(negate(f)));
    }
}

TEST_CASE("names_of") {
    CHECK(names_of(fm("x:a")) == ns({"x"}));
    CHECK(sq("|- (x:a | y:b), z:~a").names() == ns({"x", "y", "z"}));
}

TEST_CASE("sharing-freedom") {
    CHECK(is_sharing_free({fm("(x:a | y:b)"), fm("z:~a")}));
    CHECK_FALSE(is_sharing_free(fm("(x:a | x:b)")));
    CHECK_FALSE(is_sharing_free({fm("x:a"), fm("(x:~a & y:b)")}));
    try {
        (void)Sequent::make({fm("x:a"), fm("(x:~a & y:b)")});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "NotSharingFree");
    }
}

TEST_CASE("atom_at") {
    CHECK(atom_at(sq("|- (x:~a | y:a)"), nm("y")) == atom_from_text("a"));
    CHECK_THROWS_AS((void)atom_at(sq("|- x:a"), nm("zq")), Error);
    try {
        (void)atom_at(sq("|- x:a"), nm("zq"));
    } catch (const Error& e) {
        CHECK(e.code == "NameNotFound");
    }
    // The dual image looks up to the dual atom, name by name.
    FormulaPtr f = fm("(x:a | (y:~b & z:c))");
    Sequent g = Sequent::make({f});
    Sequent gbar = Sequent::make({negate(f)});
    for (Name x : names_of(f)) CHECK(atom_at(gbar, x) == dual_of(atom_at(g, x)));
}

TEST_CASE("equiv compares up to names") {
    CHECK(equiv(fm("x:a"), fm("y:a")));
    CHECK_FALSE(equiv(fm("x:a"), fm("y:~a")));
    CHECK(equiv(fm("(x:a | y:b)"), fm("(u:a | v:b)")));
    CHECK_FALSE(equiv(fm("(x:a | y:b)"), fm("(u:a & v:b)")));
}

TEST_CASE("branch sets: golden values") {
    CHECK(branches(fm("x:a")) == std::set<BranchName>{{nm("x")}});
    CHECK(branches(sq("|- x:a, y:~a, z:b")) ==
          std::set<BranchName>{ns({"x", "y", "z"})});
    CHECK(branches(sq("|- (x:a & y:~b), (z:b & u:~c), (v:~a | w:c)")) ==
          std::set<BranchName>{ns({"x", "z", "v", "w"}), ns({"x", "u", "v", "w"}),
                               ns({"y", "z", "v", "w"}), ns({"y", "u", "v", "w"})});
}

TEST_CASE("branch sets: brute-force oracle agreement") {
    std::mt19937_64 rng(12);
    unsigned k = 0;
    for (int i = 0; i < 40; ++i) {
        std::vector<FormulaPtr> ms;
        unsigned n = 1 + i % 4;
        for (unsigned j = 0; j < n; ++j)
            ms.push_back(random_formula(rng, 1 + i % 3, "sb" + std::to_string(i) + "m",
                                        k));
        Sequent g = Sequent::make(ms);
        if (g.names().size() > 12) continue;
        CHECK(branches(g) == sequent_branches_oracle(g));
        for (const auto& m : ms) CHECK(branches(m) == formula_branches_oracle(m));
    }
}

TEST_CASE("branch sets: family characterization, disjoint union, decompositions") {
    std::mt19937_64 rng(13);
    unsigned k = 0;
    for (int i = 0; i < 30; ++i) {
        std::string pfx = "sc" + std::to_string(i) + "m";
        FormulaPtr a = random_formula(rng, 2, pfx, k);
        FormulaPtr b = random_formula(rng, 2, pfx, k);
        FormulaPtr c = random_formula(rng, 1, pfx, k);
        Sequent gamma = Sequent::make({c});

        // Every branch of a sequent is a union of one branch per member, and
        // every such union is a branch.
        Sequent gab = Sequent::make({a, b, c});
        std::set<BranchName> family;
        for (const auto& x : branches(a))
            for (const auto& y : branches(b))
                for (const auto& z : branches(c)) {
                    BranchName u = x;
                    u.insert(y.begin(), y.end());
                    u.insert(z.begin(), z.end());
                    family.insert(std::move(u));
                }
        CHECK(branches(gab) == family);

        // Disjoint-union pairing of branch sets.
        std::set<BranchName> pairwise;
        for (const auto& x : branches(Sequent::make({a})))
            for (const auto& y : branches(Sequent::make({b, c}))) {
                BranchName u = x;
                u.insert(y.begin(), y.end());
                pairwise.insert(std::move(u));
            }
        CHECK(branches(gab) == pairwise);

        // Dropping members = erasing their names from every branch.
        std::set<BranchName> erased;
        NameSet bn = names_of(b), cn = names_of(c);
        for (BranchName x : branches(gab)) {
            for (Name n : bn) x.erase(n);
            for (Name n : cn) x.erase(n);
            erased.insert(std::move(x));
        }
        CHECK(branches(Sequent::make({a})) == erased);

        // Disjunction flattens; conjunction splits disjointly.
        FormulaPtr aorb = Formula::mk_or(a, b);
        FormulaPtr aandb = Formula::mk_and(a, b);
        CHECK(branches(gamma.with(aorb)) == branches(gamma.with(a).with(b)));
        std::set<BranchName> l = branches(gamma.with(a)), r = branches(gamma.with(b));
        std::set<BranchName> both = l;
        both.insert(r.begin(), r.end());
        CHECK(branches(gamma.with(aandb)) == both);
        std::set<BranchName> inter;
        std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                              std::inserter(inter, inter.begin()));
        CHECK(inter.empty());
    }
}

TEST_CASE("measures: golden values and identities") {
    Measures m0 = measures(fm("x:a"));
    CHECK(m0.height == 0);
    CHECK(m0.atom_count == 1);
    CHECK(m0.degree == 0);
    CHECK(m0.size == 1);
    Measures m1 = measures(fm("(x:a & y:b)"));
    CHECK(m1.height == 1);
    CHECK(m1.atom_count == 2);
    CHECK(m1.degree == 1);
    CHECK(m1.size == 3);

    std::mt19937_64 rng(14);
    unsigned k = 0;
    for (int i = 0; i < 40; ++i) {
        FormulaPtr f = random_formula(rng, i % 6, "sd", k);
        Measures m = measures(f);
        CHECK(m.atom_count == 1 + m.degree);
        CHECK(m.size == 1 + 2 * m.degree);
        CHECK(m.height <= m.degree);
    }
    for (int i = 0; i < 20; ++i) {
        std::vector<FormulaPtr> ms;
        for (int j = 0; j <= i % 3; ++j)
            ms.push_back(random_formula(rng, 2, "se" + std::to_string(i) + "m", k));
        Sequent g = Sequent::make(ms);
        Measures m = measures(g);
        CHECK(m.atom_count == g.size() + m.degree);
        CHECK(m.size == g.size() + 2 * m.degree);
    }
}

TEST_CASE("renaming") {
    Renaming phi{{{nm("x"), nm("y")}}};
    CHECK(print_formula(rename(fm("x:a"), phi)) == "y:a");
    Renaming ident;
    FormulaPtr f = fm("(x:a | (y:b & z:~c))");
    CHECK(equal(rename(f, ident), f));

    Renaming fwd{{{nm("x"), nm("u")}, {nm("y"), nm("v")}, {nm("z"), nm("t")}}};
    Renaming back{{{nm("u"), nm("x")}, {nm("v"), nm("y")}, {nm("t"), nm("z")}}};
    CHECK(equal(rename(rename(f, fwd), back), f));

    // Renaming commutes with negation.
    CHECK(equal(rename(negate(f), fwd), negate(rename(f, fwd))));

    Renaming notinj{{{nm("x"), nm("u")}, {nm("y"), nm("u")}}};
    CHECK_FALSE(notinj.injective());
    CHECK_THROWS_AS((void)rename(f, notinj), Error);
}

TEST_CASE("text grammar round-trips") {
    for (const char* s : {"x:a", "x:~a", "(x:a | y:b)", "((x:a & y:~b) | z:c)"}) {
        CHECK(print_formula(parse_formula(s)) == s);
    }
    CHECK(print_sequent(parse_sequent("|- x:a")) == "|- x:a");
    CHECK(print_sequent(parse_sequent("|- ((x:~a | y:a) & (z:~a | w:a))")) ==
          "|- ((x:~a | y:a) & (z:~a | w:a))");
    // Members are canonically ordered by their minimum name; name order is
    // the interning (first-use) order, so control it with fresh spellings.
    Name first = name_from_text("tgfirst");
    Name second = name_from_text("tgsecond");
    CHECK(first < second);
    CHECK(print_sequent(parse_sequent("|- tgsecond:b, tgfirst:a")) ==
          "|- tgfirst:a, tgsecond:b");
    CHECK(print_sequent(parse_sequent("|- tgfirst:a, tgsecond:b")) ==
          "|- tgfirst:a, tgsecond:b");
    CHECK_THROWS_AS((void)parse_formula("X:a"), Error);
    CHECK_THROWS_AS((void)parse_formula("x:a |"), Error);
    CHECK_THROWS_AS((void)parse_sequent("x:a"), Error);
}

TEST_CASE("error diagnostics are line-oriented") {
    Error e("SomeCode", {0, 1, 2}, "why");
    CHECK(e.diagnostic() == "SomeCode path=0.1.2 detail=why");
    Error e2("Other", {}, "d");
    CHECK(e2.diagnostic() == "Other path=- detail=d");
}

TEST_CASE("fresh names never collide with interned ones") {
    Name a = nm("freshprobe");
    Name f = fresh_name();
    CHECK(f != a);
    CHECK(name_text(f) != "freshprobe");
    CHECK(name_from_text(name_text(f)) == f);  // spelling round-trips
}
