/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include <doctest.h>

#include <random>

#include "llwb/core/formula.hpp"
#include "llwb/core/fragment.hpp"
#include "llwb/core/sequent.hpp"
#include "llwb/core/syntax.hpp"
#include "support/corpus.hpp"

using namespace llwb;

namespace {

const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
Formula n(const Formula &f) { return negate(f); }

testing::Alphabet full_alphabet(std::initializer_list<const char *> atoms)
{
	testing::Alphabet al{testing::literals(atoms),
	                     {Connective::Tensor, Connective::Par, Connective::Plus, Connective::With},
	                     {Modality::OfCourse, Modality::WhyNot},
	                     false};
	for (auto u : {UnitKind::One, UnitKind::Bot, UnitKind::Top, UnitKind::Zero})
		al.leaves.push_back(Formula::unit(u));
	return al;
}

} // namespace

TEST_CASE("negation follows the de Morgan clauses")
{
	CHECK(negate(Formula::one()) == Formula::bot());
	CHECK(negate(Formula::top()) == Formula::zero());
	CHECK(negate(Formula::atom("p", true)) == p);
	CHECK(negate(ofcourse(tensor(p, q))) == whynot(par(n(p), n(q))));
	CHECK(negate(with(p, q)) == plus(n(p), n(q)));
}

TEST_CASE("negation is an involution and a de Morgan homomorphism on random formulas")
{
	auto al = full_alphabet({"p", "q", "r"});
	std::mt19937_64 rng(11);
	for (int i = 0; i < 2000; ++i) {
		Formula f = testing::random_formula(al, 1 + i % 12, rng);
		CHECK(negate(negate(f)) == f);
		if (f.is_binary())
			CHECK(negate(f) == Formula::binary(dual(f.connective()), n(f.left()), n(f.right())));
		if (f.is_modal())
			CHECK(negate(f) == Formula::modal(dual(f.modality()), n(f.body())));
	}
}

TEST_CASE("implications desugar")
{
	CHECK(desugar_implication(ImplicationKind::Multiplicative, p, q) == par(n(p), q));
	CHECK(desugar_implication(ImplicationKind::Additive, p, q) == plus(n(p), q));
	Formula pq = desugar_implication(ImplicationKind::Multiplicative, p, q);
	CHECK(desugar_implication(ImplicationKind::Multiplicative, pq, r) == par(tensor(p, n(q)), r));
}

TEST_CASE("polarity")
{
	CHECK(polarity(tensor(p, q)) == Polarity::Positive);
	CHECK(polarity(with(p, q)) == Polarity::Negative);
	CHECK(polarity(Formula::top()) == Polarity::Negative);
	CHECK(polarity(Formula::zero()) == Polarity::Positive);
	CHECK(polarity(ofcourse(p)) == Polarity::Positive);
	CHECK(polarity(whynot(p)) == Polarity::Negative);
	CHECK(polarity(p) == Polarity::Positive);
	CHECK(polarity(n(p)) == Polarity::Negative);
}

TEST_CASE("fragment classification")
{
	CHECK(classify_fragment(Sequent{tensor(p, q), n(p)}) == Fragment::MLL);
	CHECK(classify_fragment(Sequent{ofcourse(p), whynot(n(p))}) == Fragment::ELL);
	CHECK(classify_fragment(Sequent{tensor(p, n(with(p, q)))}) == Fragment::MALL);
	CHECK(classify_fragment(Sequent{p, n(p)}) == Fragment::MLL);
	CHECK(classify_fragment(Sequent{p, Formula::top()}) == Fragment::ALL);
	CHECK(classify_fragment(Sequent{ofcourse(tensor(p, q))}) == Fragment::MELL);
	CHECK(classify_fragment(Sequent{ofcourse(with(p, q)), tensor(p, q)}) == Fragment::LL);
	CHECK(join(Fragment::ALL, Fragment::ELL) == Fragment::AELL);
	CHECK(leq(Fragment::MLL, Fragment::MALL));
	CHECK_FALSE(leq(Fragment::ELL, Fragment::MALL));
}

TEST_CASE("classification is monotone under sub-multisets")
{
	auto al = full_alphabet({"p", "q"});
	std::mt19937_64 rng(12);
	for (int i = 0; i < 500; ++i) {
		std::vector<Formula> fs;
		for (int k = 0; k < 3; ++k)
			fs.push_back(testing::random_formula(al, 1 + (i + k) % 6, rng));
		Sequent s(fs);
		for (std::size_t k = 0; k < s.size(); ++k)
			CHECK(leq(classify_fragment(s.without(k)), classify_fragment(s)));
	}
}

TEST_CASE("parsing")
{
	CHECK(parse_formula("p * q^") == tensor(p, n(q)));
	CHECK(parse_formula("(p * q)^") == par(n(p), n(q)));
	CHECK(parse_formula("p -o q -o r") == par(n(p), par(n(q), r)));
	CHECK(parse_formula("!?p^") == ofcourse(whynot(n(p))));
	CHECK(parse_formula("top & bot") == with(Formula::top(), Formula::bot()));

	TwoSidedSequent s = parse_sequent("p, p -o q |- q");
	CHECK(s.antecedent == std::vector<Formula>{p, par(n(p), q)});
	CHECK(s.succedent == std::vector<Formula>{q});
	CHECK(parse_one_sided("p, p -o q |- q") == Sequent{n(p), tensor(p, n(q)), q});
	CHECK(parse_one_sided("|- 1") == Sequent{Formula::one()});
}

TEST_CASE("parse errors carry a position")
{
	CHECK(parse_formula("p * q + r") == plus(tensor(p, q), r));
	CHECK_THROWS_AS(parse_formula("p * q & r"), ParseError);
	CHECK_THROWS_AS(parse_formula("p + q | r"), ParseError);
	CHECK_THROWS_AS(parse_formula("p &"), ParseError);
	CHECK_THROWS_AS(parse_sequent("p |- q |- r"), ParseError);
	try {
		parse_formula("p * $");
		FAIL("no error");
	} catch (const ParseError &e) {
		CHECK(e.line() == 1);
		CHECK(e.column() == 5);
	}
}

TEST_CASE("printing")
{
	CHECK(print(n(p)) == "p^");
	CHECK(print(ofcourse(p)) == "!p");
	CHECK(print(par(p, n(p))) == "p | p^");
	CHECK(print(Sequent{p, n(p)}) == "|- p, p^");
}

TEST_CASE("print then parse is the identity")
{
	auto al = full_alphabet({"p", "q", "r"});
	std::mt19937_64 rng(13);
	for (int i = 0; i < 3000; ++i) {
		Formula f = testing::random_formula(al, 1 + i % 30, rng);
		CHECK(parse_formula(print(f)) == f);
	}
}

TEST_CASE("sequents are multisets")
{
	CHECK(Sequent{p, q, p} == Sequent{q, p, p});
	CHECK_FALSE(Sequent{p, q} == Sequent{p, q, q});
	CHECK(normalize_two_sided(parse_sequent("p |- p")) == Sequent{n(p), p});
	CHECK(Sequent{p, tensor(p, q)}.total_size() == 4);
}
