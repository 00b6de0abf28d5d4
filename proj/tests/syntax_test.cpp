#include <gtest/gtest.h>

#include <string>

#include "bilateral/bilateral.hpp"
#include "support/reference_rules.hpp"
#include "support/random_schema.hpp"

using namespace bilateral;

namespace {

Formula and_ab() { return Formula::apply("and", {Formula::meta("A"), Formula::meta("B")}); }

std::string parse_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Conjugate, FlipsSignOnly) {
  auto a = plus(Formula::meta("A"));
  EXPECT_EQ(conjugate(a), minus(Formula::meta("A")));
  EXPECT_EQ(conjugate(conjugate(minus(and_ab()))), minus(and_ab()));
  EXPECT_EQ(conjugate(plus(Formula::apply("bot"))), minus(Formula::apply("bot")));
  EXPECT_EQ(conjugate(Sign::Plus), Sign::Minus);
  EXPECT_EQ(conjugate(conjugate(Sign::Minus)), Sign::Minus);
}

TEST(Conjugate, InvolutionOnRandomFormulas) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Formula f = Formula::meta("A");
    for (int depth = rng() % 4; depth > 0; --depth)
      f = Formula::apply(rng() % 2 ? "imp" : "neg", rng() % 2 ? std::vector<Formula>{f} : std::vector<Formula>{f, f});
    SignedFormula x{rng() % 2 ? Sign::Plus : Sign::Minus, f};
    EXPECT_EQ(conjugate(conjugate(x)), x);
    EXPECT_NE(conjugate(x), x);
  }
}

TEST(ParseSpec, ConjunctionBlock) {
  auto specs = parse_spec(R"(
    (connective "and" (arity 2) (args A B)
      (rule "+andI" (polarity +) (role intro) (premises (+ A) (+ B)) (conclusion (+ (and A B))))
      (rule "+andE1" (polarity +) (role elim) (major (+ (and A B))) (premises) (conclusion (+ A)))
      (rule "-andE" (polarity -) (role elim) (major (- (and A B)))
            (premises (side (discharge (- A)) _ANY) (side (discharge (- B)) _ANY)) (conclusion _ANY)))
  )");
  ASSERT_EQ(specs.size(), 1u);
  const auto& s = specs[0];
  EXPECT_EQ(s.name, "and");
  EXPECT_EQ(s.arity, 2u);
  const auto& ai = s.family(Polarity::Assertive, Role::Intro);
  ASSERT_EQ(ai.size(), 1u);
  ASSERT_EQ(ai[0].premises.size(), 2u);
  EXPECT_EQ(ai[0].premises[0], Premise::plain(plus(Formula::meta("A"))));
  EXPECT_EQ(ai[0].premises[1], Premise::plain(plus(Formula::meta("B"))));
  const auto& re = s.family(Polarity::Rejective, Role::Elim);
  ASSERT_EQ(re.size(), 1u);
  EXPECT_TRUE(re[0].conclusion.is_arbitrary());
  EXPECT_TRUE(re[0].premises[1].is_side());
}

TEST(ParseSpec, EmptyInput) {
  EXPECT_TRUE(parse_spec("").empty());
  EXPECT_TRUE(parse_spec("  ; only a comment\n").empty());
}

TEST(ParseSpec, Errors) {
  EXPECT_NE(parse_error(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity +) (role intro) (premises (+ A)) (conclusion _ANY))))")
                .find("misplaced ArbitraryMark"),
            std::string::npos);
  EXPECT_NE(parse_error(R"((connective "x" (arity 2) (args A)))").find("arity mismatch"),
            std::string::npos);
  EXPECT_NE(parse_error(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity +) (role intro) (premises (+ B)) (conclusion (+ (x A))))))")
                .find("undeclared metavariable B"),
            std::string::npos);
  EXPECT_NE(parse_error(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity +) (role intro) (premises (+ (zork A))) (conclusion (+ (x A))))))")
                .find("unknown connective zork"),
            std::string::npos);
  EXPECT_NE(parse_error(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity -) (role intro) (premises (+ A)) (conclusion (+ (x A))))))")
                .find("polarity/family mismatch"),
            std::string::npos);
  EXPECT_NE(parse_error(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity +) (role intro) (premises (+ (and A A))) (conclusion (+ (x A))))))")
                .find("compound schematic formula"),
            std::string::npos);
  EXPECT_NE(parse_error(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity +) (role elim) (major (+ (x A))) (premises (side (discharge) _ANY)) (conclusion _ANY))))")
                .find("discharges nothing"),
            std::string::npos);
  EXPECT_NE(parse_error(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity +) (role elim) (major (+ (x A))) (premises (side (discharge (+ A)) _ANY)) (conclusion (+ A)))))")
                .find("misplaced ArbitraryMark"),
            std::string::npos);
}

TEST(ParseSpec, SyntaxErrorsCarryPositions) {
  EXPECT_EQ(parse_error("(connective \"x\"\n  (arity 1)"), "1:1: unterminated list");
  EXPECT_EQ(parse_error("\n\n   )"), "3:4: unexpected ')'");
  EXPECT_EQ(parse_error("(connective \"x\" (arity 1) (args A) (bogus))"),
            "1:36: unknown clause in connective \"x\"");
}

TEST(ParseSpec, UnicodeGlyphsNormalise) {
  auto specs = parse_spec(R"((connective "∧" (arity 2) (args A B)
      (rule "i" (polarity +) (role intro) (premises (+ A) (+ B)) (conclusion (+ (∧ A B))))
      (rule "e" (polarity −) (role elim) (major (− (∧ A B))) (premises (side (discharge (− A)) _ANY) (side (discharge (− B)) _ANY)) (conclusion _ANY))))");
  ASSERT_EQ(specs.size(), 1u);
  EXPECT_EQ(specs[0].name, "and");
  EXPECT_EQ(specs[0].family(Polarity::Assertive, Role::Intro)[0].conclusion.formula(), plus(and_ab()));
  EXPECT_EQ(specs[0].family(Polarity::Rejective, Role::Elim).size(), 1u);
}

TEST(ParseSpec, DeclaredType) {
  auto specs = parse_spec(R"((connective "x" (arity 1) (args A)
      (rule "r" (polarity +) (role intro) (type 2) (premises (+ A)) (conclusion (+ (x A))))))");
  EXPECT_EQ(specs[0].family(Polarity::Assertive, Role::Intro)[0].declared_type, RuleType::Type2);
}

TEST(PrintSpec, RoundTripOnBuiltins) {
  const std::string once = print_specs(builtin_specs());
  const auto reparsed = parse_spec(once);
  EXPECT_EQ(print_specs(reparsed), once);
  ASSERT_EQ(reparsed.size(), builtin_specs().size());
  for (std::size_t i = 0; i < reparsed.size(); ++i) {
    EXPECT_EQ(reparsed[i].name, builtin_specs()[i].name);
    for (auto k : kAllFamilies)
      EXPECT_EQ(reparsed[i].family(k), builtin_specs()[i].family(k)) << reparsed[i].name;
  }
}

TEST(PrintSpec, RoundTripOnRandomSpecs) {
  gen::SchemaGen g(11);
  for (int i = 0; i < 300; ++i) {
    auto spec = gen::SchemaGen::skeleton(static_cast<std::size_t>(g.uniform(0, 3)));
    auto intro = g.disguise(g.type1_intro(spec), spec);
    auto elim = g.disguise(g.type2_elim(spec), spec);
    intro.name = "i";
    elim.name = "e";
    spec.family(*polarity_of(intro), Role::Intro).push_back(intro);
    spec.family(*polarity_of(elim), Role::Elim).push_back(elim);
    // The disguise renames variables away from the declared arguments; the
    // DSL needs them declared, so print the canonical forms.
    for (auto& fam : spec.families)
      for (auto& r : fam) {
        auto name = r.name;
        r = canonicalize(r, spec);
        r.name = name;
      }
    const std::string once = print_spec(spec);
    auto back = parse_spec(once);
    ASSERT_EQ(back.size(), 1u) << once;
    EXPECT_EQ(print_spec(back[0]), once);
  }
}

TEST(Canonicalize, RenamesToDeclaredArguments) {
  auto spec = ref::conjunction().spec;
  RuleSchema r = ref::intro({ref::pl(ref::P("X")), ref::pl(ref::P("Y"))},
                              plus(Formula::apply("and", {Formula::meta("X"), Formula::meta("Y")})));
  r.name = "+andI";
  auto c = canonicalize(r, spec);
  EXPECT_EQ(c, canonicalize(spec.family(Polarity::Assertive, Role::Intro)[0], spec));
  EXPECT_TRUE(c.name.empty());
}

TEST(Canonicalize, PremiseOrderIrrelevant) {
  auto spec = ref::disjunction().spec;
  auto r = spec.family(Polarity::Rejective, Role::Intro)[0];
  auto swapped = r;
  std::swap(swapped.premises[0], swapped.premises[1]);
  EXPECT_EQ(canonicalize(r, spec), canonicalize(swapped, spec));
}

TEST(Canonicalize, IdempotentAndDisguiseInvariant) {
  gen::SchemaGen g(3);
  for (int i = 0; i < 500; ++i) {
    auto spec = gen::SchemaGen::skeleton(static_cast<std::size_t>(g.uniform(0, 3)));
    auto r = i % 2 ? g.type1_intro(spec) : g.type2_elim(spec);
    auto c = canonicalize(r, spec);
    EXPECT_EQ(canonicalize(c, spec), c);
    EXPECT_EQ(canonicalize(g.disguise(r, spec), spec), c);
  }
}

TEST(FamilyEqual, Basics) {
  auto spec = ref::conjunction().spec;
  auto elims = spec.family(Polarity::Assertive, Role::Elim);
  auto reversed = std::vector<RuleSchema>{elims[1], elims[0]};
  EXPECT_TRUE(family_equal(elims, reversed, spec));
  EXPECT_FALSE(family_equal({elims[0]}, elims, spec));
  EXPECT_TRUE(family_equal({}, {}, spec));
}

TEST(FamilyEqual, ProjectionStyleRejectiveImplicationDiffersFromTypeTwo) {
  auto spec = ref::implication().spec;
  auto f = minus(Formula::apply("imp", {Formula::meta("A"), Formula::meta("B")}));
  std::vector<RuleSchema> projections = {ref::elim(f, {}, ref::P("A")), ref::elim(f, {}, ref::M("B"))};
  EXPECT_FALSE(family_equal(projections, spec.family(Polarity::Rejective, Role::Elim), spec));
}

TEST(FamilyEqual, IsAnEquivalence) {
  gen::SchemaGen g(5);
  auto spec = gen::SchemaGen::skeleton(2);
  std::vector<std::vector<RuleSchema>> fams;
  for (int i = 0; i < 40; ++i) {
    std::vector<RuleSchema> f;
    for (int k = g.uniform(0, 2); k > 0; --k) f.push_back(g.type2_elim(spec));
    fams.push_back(f);
    std::vector<RuleSchema> d;
    for (const auto& r : f) d.push_back(g.disguise(r, spec));
    std::reverse(d.begin(), d.end());
    fams.push_back(d);
  }
  for (const auto& a : fams) {
    EXPECT_TRUE(family_equal(a, a, spec));
    for (const auto& b : fams) {
      EXPECT_EQ(family_equal(a, b, spec), family_equal(b, a, spec));
      if (!family_equal(a, b, spec)) continue;
      for (const auto& c : fams) EXPECT_TRUE(!family_equal(b, c, spec) || family_equal(a, c, spec));
    }
  }
}
