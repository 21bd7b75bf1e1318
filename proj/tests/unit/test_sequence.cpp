#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strongpoly/canonical.hpp"
#include "strongpoly/errors.hpp"
#include "strongpoly/io.hpp"
#include "strongpoly/sequence.hpp"
#include "strongpoly/sexpr.hpp"
#include "strongpoly/verify.hpp"

using namespace strongpoly;
using namespace fixture;

namespace {

FamilyId fam(FamilyKind k) {
    FamilyId f;
    f.kind = k;
    return f;
}

FamilyArg random_param(std::mt19937_64& rng) {
    static const char* names[] = {"j", "k", "l"};
    int x = std::uniform_int_distribution<int>(0, 4)(rng);
    if (x < 3) return std::string(names[x]);
    return std::int64_t(x - 1);
}

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    int pick = std::uniform_int_distribution<int>(0, depth > 0 ? 13 : 3)(rng);
    auto p = [&] { return random_param(rng); };
    auto sub = [&] { return random_expr(rng, depth - 1); };
    switch (pick) {
    case 0:
        return gen(fam(FamilyKind::Complete), {p()});
    case 1: {
        FamilyId f = fam(FamilyKind::LoopedComplete);
        f.loop_weight = Rational(-3, 2);
        return gen(f, {p()});
    }
    case 2: {
        FamilyId f = fam(FamilyKind::Johnson);
        f.johnson_l = 2;
        f.johnson_d = {0, 1};
        return gen(f, {p()});
    }
    case 3:
        return fixed(simple(3, {{0, 1}, {1, 2}}));
    case 4:
        return unary(ExprKind::Complement, sub());
    case 5:
        return unary(ExprKind::LoopedComplement, sub());
    case 6:
        return reweight(sub(), 1, Rational(-1, 3), 2, 0);
    case 7:
        return unary(ExprKind::Line, sub());
    case 8:
        return binary(ExprKind::Union, sub(), sub());
    case 9:
        return binary(std::uniform_int_distribution<int>(0, 1)(rng) ? ExprKind::Join : ExprKind::Lex, sub(), sub());
    case 10:
        return compose(complete(2), {sub(), sub()});
    case 11:
        return blow_up(complete(2, 1), {p(), p()});
    case 12: {
        ColouredRootedTree t({TreeNode{std::nullopt, {}, "R", 1}, TreeNode{0, {0}, "F", 1}});
        return branched(t, {1, p()}, {{"F", sub()}, {"R", gen(fam(FamilyKind::Coclique), {p()})}});
    }
    default: {
        Cotree t({CotreeNode{std::nullopt, 1, 1}, CotreeNode{0, -1, 1}});
        return cotree_branched(t, {1, p()});
    }
    }
}

}  // namespace

TEST(SExp, ParseAndPrint) {
    SExp e = parse_sexp("(join (coclique j) ; comment\n  (coclique k))");
    ASSERT_TRUE(e.is_list);
    EXPECT_EQ(e.head(), "join");
    EXPECT_EQ(print_sexp(e), "(join (coclique j) (coclique k))");
    EXPECT_THROW(parse_sexp("(a b"), ParseError);
    EXPECT_THROW(parse_sexp("a b"), ParseError);
    EXPECT_THROW(parse_sexp(")"), ParseError);
}

TEST(Sequence, EvalExamples) {
    EXPECT_EQ(SequenceExpr::parse("(complete k)").eval(Binding{{"k", 5}}), complete(5));
    SequenceExpr kjk = SequenceExpr::parse("(join (coclique j) (coclique k))");
    EXPECT_EQ(kjk.free_params(), (std::vector<std::string>{"j", "k"}));
    EXPECT_TRUE(is_isomorphic(kjk.eval(Binding{{"j", 2}, {"k", 3}}), bipartite(2, 3)));
    SequenceExpr lex = SequenceExpr::parse("(lex (complete k) (graph 2))");
    EXPECT_TRUE(is_isomorphic(lex.eval(Binding{{"k", 3}}), complement(matching(3))));
}

TEST(Sequence, SharedParameters) {
    SequenceExpr e = SequenceExpr::parse("(compose (graph 2 (0 1)) (complete k) (union (coclique k) (complete 2)))");
    EXPECT_EQ(e.free_params(), std::vector<std::string>{"k"});
    std::int64_t three[] = {3};
    EXPECT_EQ(e.eval(std::span<const std::int64_t>(three)).n(), 8);
}

TEST(Sequence, Errors) {
    EXPECT_THROW(SequenceExpr::parse("(frobnicate k)"), ParseError);
    EXPECT_THROW(SequenceExpr::parse("(complete j k)"), ParseError);
    EXPECT_THROW(SequenceExpr::parse("(complete k)").eval(Binding{{"j", 2}}), DomainError);
    EXPECT_THROW(SequenceExpr::parse("(complete k)").eval(Binding{{"k", 0}}), DomainError);
    // join needs simple operands
    EXPECT_THROW(SequenceExpr::parse("(join (looped-complete k 2) (complete 1))").eval(Binding{{"k", 2}}), DomainError);
}

TEST(Sequence, RandomRoundTrip) {
    std::mt19937_64 rng(131);
    for (int i = 0; i < 50; ++i) {
        SequenceExpr e(random_expr(rng, 3));
        SequenceExpr back = SequenceExpr::parse(e.str());
        EXPECT_EQ(back, e) << e.str();
        EXPECT_EQ(back.str(), e.str());
        EXPECT_EQ(expr_from_json(expr_to_json(e)), e) << e.str();
        EXPECT_EQ(back.free_params(), e.free_params());
    }
}

TEST(Sequence, UnionIsAdditive) {
    std::mt19937_64 rng(137);
    Multigraph g = as_multi(path(3));
    int checked = 0;
    for (int i = 0; i < 200 && checked < 25; ++i) {
        SequenceExpr a(random_expr(rng, 2)), b(random_expr(rng, 2));
        SequenceExpr u(binary(ExprKind::Union, a.ptr(), b.ptr()));
        Binding bind{{"j", 2}, {"k", 2}, {"l", 1}};
        try {
            WeightedGraph ha = a.eval(bind), hb = b.eval(bind);
            if (ha.n() + hb.n() > 40) continue;
            EXPECT_EQ(hom(g, u.eval(bind)), hom(g, ha) + hom(g, hb));
            ++checked;
        } catch (const DomainError&) {
        }
    }
    EXPECT_GE(checked, 10);
}

TEST(Sequence, TreeHomMatchesEval) {
    SequenceExpr seq = SequenceExpr::parse(
        "(branched ((nil () R 1) (0 (0) F k) (1 (1) F j)) (F (looped-complete j 1)) (R (coclique 2)))");
    EXPECT_EQ(seq.free_params(), (std::vector<std::string>{"k", "j"}));
    for (const auto& g : {as_multi(path(3)), as_multi(complete(3)), Multigraph(2, {{0, 1}, {0, 1}})})
        for (std::int64_t k = 1; k <= 3; ++k)
            for (std::int64_t j = 1; j <= 2; ++j) {
                std::int64_t x[] = {k, j};
                EXPECT_EQ(*tree_hom(seq, g, x), hom(g, seq.eval(std::span<const std::int64_t>(x))));
            }
    SequenceExpr cot = SequenceExpr::parse("(cotree (nil 1 1) (0 0 k) (1 leaf j))");
    std::int64_t x[] = {3, 2};
    EXPECT_EQ(*tree_hom(cot, as_multi(cycle(4)), x), hom(as_multi(cycle(4)), cot.eval(std::span<const std::int64_t>(x))));
    EXPECT_FALSE(tree_hom(SequenceExpr::parse("(complete k)"), Multigraph(1), x));
}

TEST(Verify, CompleteGraphs) {
    FitVerdict v = verify_strongly_polynomial(SequenceExpr::parse("(complete k)"), as_multi(complete(3)));
    EXPECT_TRUE(v.consistent());
    ASSERT_TRUE(v.poly);
    EXPECT_EQ(v.poly->str(), "k^3 - 3*k^2 + 2*k");
    VerifyOptions opt;
    opt.degree = 3;
    opt.offsets = {2, 3};
    EXPECT_EQ(verify_strongly_polynomial(SequenceExpr::parse("(complete k)"), as_multi(complete(3)), opt).poly->str(),
              "k^3 - 3*k^2 + 2*k");
}

TEST(Verify, DegreeBoundedByVertexCount) {
    SequenceExpr seq = SequenceExpr::parse("(complete k)");
    for (const auto& h : {path(4), cycle(4), star(3), complete(4)}) {
        FitVerdict v = verify_strongly_polynomial(seq, as_multi(h));
        ASSERT_TRUE(v.consistent());
        EXPECT_LE(v.poly->total_degree(), h.n());
        // samples agree with the colouring oracle
        for (const auto& r : v.rows)
            EXPECT_EQ(r.hom, Rational(oracle::proper_colourings(h.n(), oracle::edges_of(as_multi(h)), int(r.point[0]))));
    }
}

TEST(Verify, Pow2LoopInconsistent) {
    FitVerdict v = verify_strongly_polynomial(SequenceExpr::parse("(pow2loop k)"), as_multi(complete(2)));
    EXPECT_FALSE(v.consistent());
    ASSERT_TRUE(v.witness);
    // hom(K_2, H_k) counts the loops: floor(log2 k) + 1
    std::int64_t k = v.witness->point[0], loops = 0;
    for (std::int64_t p = 1; p <= k; p *= 2) ++loops;
    EXPECT_EQ(v.witness->observed, Rational(loops));
    EXPECT_NE(v.witness->predicted, v.witness->observed);
}

TEST(Verify, BivariateAndBatch) {
    SequenceExpr seq = SequenceExpr::parse("(join (coclique j) (complete k))");
    std::vector<Multigraph> gs{as_multi(complete(2)), as_multi(path(3)), as_multi(cycle(3))};
    auto batch = verify_batch(seq, gs);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        FitVerdict one = verify_strongly_polynomial(seq, gs[i]);
        EXPECT_TRUE(batch[i].consistent());
        EXPECT_EQ(*batch[i].poly, *one.poly);
    }
    EXPECT_EQ(batch[0].poly->str(), "2*j*k + k^2 - k");
}

TEST(Verify, TreeHomOptionAgrees) {
    SequenceExpr seq = SequenceExpr::parse("(branched ((nil () K1 1) (0 (0) F k)) (F (coclique j)) (K1 (complete 1)))");
    VerifyOptions off;
    off.tree_hom = false;
    for (const auto& g : {as_multi(complete(2)), as_multi(path(3))}) {
        FitVerdict a = verify_strongly_polynomial(seq, g), b = verify_strongly_polynomial(seq, g, off);
        EXPECT_TRUE(a.consistent());
        EXPECT_EQ(*a.poly, *b.poly);
    }
}

TEST(Verify, SparseMode) {
    SequenceExpr seq = SequenceExpr::parse(
        "(union (union (complete a) (coclique b)) (union (complete c) (union (coclique d) (complete e))))");
    VerifyOptions opt;
    opt.degree = 1;
    FitVerdict v = verify_strongly_polynomial(seq, Multigraph(1), opt);
    EXPECT_TRUE(v.sparse);
    EXPECT_TRUE(v.consistent());
    EXPECT_EQ(v.poly->str(), "a + b + c + d + e");
    // K_2 counts are quadratic, so a degree-1 bound must fail
    FitVerdict bad = verify_strongly_polynomial(seq, as_multi(complete(2)), opt);
    EXPECT_FALSE(bad.consistent());
}

TEST(Verify, ValidationPointsLeaveGrid) {
    auto pts = validation_points(2, 3, {1, 2});
    EXPECT_EQ(pts.size(), 6u);
    for (const auto& p : pts) EXPECT_TRUE(p[0] > 4 || p[1] > 4);
    EXPECT_THROW(validation_points(1, 2, {0}), DomainError);
}

TEST(Verify, Csv) {
    FitVerdict v = verify_strongly_polynomial(SequenceExpr::parse("(coclique k)"), Multigraph(1));
    std::string csv = verdict_csv(v, {"k"});
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,hom,predicted,match");
    EXPECT_NE(csv.find("1,1,1,true"), std::string::npos);
}

TEST(Io, JsonRoundTrips) {
    WeightedGraph g = GraphBuilder(3).set(0, 1, 1).set(1, 2, Rational(1, 2)).set(2, 2, 3).build();
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
    EXPECT_EQ(graph_to_json(simple(2, {{0, 1}})), "{\"n\":2,\"edges\":[[0,1]]}");
    Multigraph m = multigraph_from_json("{\"n\":2,\"edges\":[[0,1,2],[1,1]]}");
    EXPECT_EQ(m.m(), 3u);
    ColouredRootedTree t({TreeNode{std::nullopt, {}, "R", 1}, TreeNode{0, {0}, "F", 3}});
    EXPECT_EQ(tree_from_json(tree_to_json(t)), t);
    Cotree c({CotreeNode{std::nullopt, 1, 1}, CotreeNode{0, -1, 4}});
    EXPECT_EQ(cotree_from_json(cotree_to_json(c)), c);
    MultiPoly p({"j", "k"});
    p.add_term({1, 1}, 2);
    p.add_term({0, 2}, Rational(-1, 3));
    EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
    EXPECT_THROW(graph_from_json("{\"n\":2,\"edges\":[[0,5]]}"), Error);
    EXPECT_THROW(graph_from_json("not json"), ParseError);
}
