#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trigsum/error.hpp"
#include "trigsum/expr.hpp"

using namespace trigsum;

namespace {

ExprPtr ratl(long n, long d = 1) { return make_rational(BigRational(n, d)); }

// Random AST of bounded depth, drawing only parser-reachable shapes
// (nonnegative rational literals; negation spelled as Neg).
ExprPtr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> leaf_pick(0, 3);
    std::uniform_int_distribution<int> node_pick(0, 9);
    std::uniform_int_distribution<long> small(0, 12);
    std::uniform_int_distribution<long> denom(1, 9);
    std::uniform_int_distribution<long> expo(-4, 4);
    static const char* names[] = {"a", "b", "c", "n", "j", "k", "u", "t", "x", "y"};
    std::uniform_int_distribution<int> name_pick(0, 9);

    if (depth <= 0) {
        switch (leaf_pick(rng)) {
            case 0: return ratl(small(rng));
            case 1: return ratl(small(rng), denom(rng));
            case 2: return make_pi();
            default: return make_var(names[name_pick(rng)]);
        }
    }
    switch (node_pick(rng)) {
        case 0: return make_add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 1: return make_sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2: return make_mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 3: return make_div(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 4: return make_neg(random_expr(rng, depth - 1));
        case 5: return make_pow(random_expr(rng, depth - 1), expo(rng));
        case 6: return make_sin(random_expr(rng, depth - 1));
        case 7: return make_cos(random_expr(rng, depth - 1));
        case 8:
            return make_sum(names[name_pick(rng)], random_expr(rng, depth - 1),
                            random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        default: return random_expr(rng, 0);
    }
}

} // namespace

TEST_CASE("basic parses") {
    ExprPtr e = parse("sin(pi/6)");
    CHECK(structurally_equal(e, make_sin(make_div(make_pi(), ratl(6)))));

    CHECK(structurally_equal(parse("1/2"), ratl(1, 2)));
    CHECK(structurally_equal(parse("1 / 2"), ratl(1, 2)));
    CHECK(structurally_equal(parse("3/n"), make_div(ratl(3), make_var("n"))));
    CHECK(structurally_equal(parse("-k^2"), make_neg(make_pow(make_var("k"), 2))));
    CHECK(structurally_equal(parse("k^-2"), make_pow(make_var("k"), -2)));
    CHECK(structurally_equal(parse("a-b-c"),
                             make_sub(make_sub(make_var("a"), make_var("b")), make_var("c"))));
    CHECK(structurally_equal(parse("a/b/c"),
                             make_div(make_div(make_var("a"), make_var("b")), make_var("c"))));
}

TEST_CASE("the full quotient-sum text parses to the expected AST") {
    ExprPtr parsed = parse(
        "sum(k=1..n/2-1, sin((j-1)*k*pi/n)*sin((j+1)*k*pi/n)"
        " / (sin(k*pi/n)^2 * sin(j*k*pi/n)^2))");

    auto n = [] { return make_var("n"); };
    auto j = [] { return make_var("j"); };
    auto k = [] { return make_var("k"); };
    auto angle = [&](ExprPtr factor) {
        return make_div(make_mul(make_mul(factor, k()), make_pi()), n());
    };
    ExprPtr numerator = make_mul(make_sin(angle(make_sub(j(), ratl(1)))),
                                 make_sin(angle(make_add(j(), ratl(1)))));
    ExprPtr denominator =
        make_mul(make_pow(make_sin(make_div(make_mul(k(), make_pi()), n())), 2),
                 make_pow(make_sin(make_div(make_mul(make_mul(j(), k()), make_pi()), n())), 2));
    ExprPtr expected = make_sum(
        "k", ratl(1), make_sub(make_div(n(), ratl(2)), ratl(1)),
        make_div(numerator, denominator));

    CHECK(structurally_equal(parsed, expected));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("sin(pi"), SourceError);
    try {
        parse("sin(pi");
    } catch (const SourceError& e) {
        CHECK(e.offset() == 6); // end of input
        CHECK(e.line() == 1);
        CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse("1/0"), SourceError);
    CHECK_THROWS_AS(parse("2 +"), SourceError);
    CHECK_THROWS_AS(parse("sum(1=2..3, k)"), SourceError);
    CHECK_THROWS_AS(parse("a $ b"), SourceError);
    CHECK_THROWS_AS(parse("k ^ n"), SourceError); // exponents are literal integers
    CHECK_THROWS_AS(parse("(1+2"), SourceError);
    CHECK_THROWS_AS(parse("1 2"), SourceError);
}

TEST_CASE("render basics") {
    CHECK(render(make_sin(make_pi())) == "sin(pi)");
    CHECK(render(make_pow(make_sin(make_var("k")), 2)) == "sin(k)^2");
    ExprPtr div12 = make_div(ratl(1), ratl(2));
    CHECK(structurally_equal(parse(render(div12)), div12)); // not collapsed to 1/2
}

TEST_CASE("round-trip on 1000 random ASTs of depth <= 8") {
    std::mt19937 rng(7041982);
    std::uniform_int_distribution<int> depth(0, 8);
    for (int i = 0; i < 1000; ++i) {
        ExprPtr e = random_expr(rng, depth(rng));
        std::string text = render(e);
        CAPTURE(text);
        ExprPtr back = parse(text);
        CHECK(structurally_equal(e, back));
    }
}

TEST_CASE("parse is deterministic") {
    const std::string text =
        "sum(k=0..(n-3)/2, sin((j-1)*(2*k+1)*pi/(2*n)) / sin((2*k+1)*pi/(2*n))^2)";
    CHECK(structurally_equal(parse(text), parse(text)));
    CHECK(render(parse(text)) == render(parse(text)));
}

TEST_CASE("substitution") {
    CHECK(structurally_equal(substitute(make_var("n"), {{"n", BigRational(10)}}), ratl(10)));

    ExprPtr sum_open = make_sum("k", ratl(1), make_var("n"), make_var("k"));
    ExprPtr subbed = substitute(sum_open, {{"n", BigRational(3)}});
    CHECK(structurally_equal(subbed, make_sum("k", ratl(1), ratl(3), make_var("k"))));

    // A bound index is not free: binding "k" leaves the body alone.
    ExprPtr sum_closed = make_sum("k", ratl(1), ratl(2), make_var("k"));
    CHECK(structurally_equal(substitute(sum_closed, {{"k", BigRational(5)}}), sum_closed));
}

TEST_CASE("free variable law") {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> depth(0, 6);
    const std::map<std::string, BigRational> bindings{
        {"a", BigRational(2)}, {"n", BigRational(5)}, {"k", BigRational(1, 2)}};
    for (int i = 0; i < 200; ++i) {
        ExprPtr e = random_expr(rng, depth(rng));
        auto before = free_vars(e);
        auto after = free_vars(substitute(e, bindings));
        std::set<std::string> expected;
        for (const auto& v : before)
            if (!bindings.count(v)) expected.insert(v);
        CHECK(after == expected);
    }
}

TEST_CASE("sum bounds are outside the index scope") {
    // The index occurring in its own bounds refers to the outer binding.
    ExprPtr e = parse("sum(k=k..k+1, k)");
    auto fv = free_vars(e);
    CHECK(fv == std::set<std::string>{"k"});
}
