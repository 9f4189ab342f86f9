/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include <doctest.h>

#include <algorithm>
#include <random>

#include "llwb/core/fragment.hpp"
#include "llwb/core/syntax.hpp"
#include "llwb/ell/ell.hpp"
#include "support/ell_oracle.hpp"

using namespace llwb;

namespace {

CanonicalModality canon(const char *w) { return canonicalize(ModalityWord::parse(w)); }

Verdict ell(const char *text, EllMode mode = EllMode::Literal)
{
	return decide_ell(parse_one_sided(text), mode).verdict;
}

ModalityWord random_word(std::mt19937_64 &rng, std::size_t max_len)
{
	std::vector<Modality> s(rng() % (max_len + 1));
	for (auto &m : s)
		m = rng() % 2 ? Modality::OfCourse : Modality::WhyNot;
	return ModalityWord(s);
}

Sequent random_ell_sequent(std::mt19937_64 &rng)
{
	std::vector<Formula> fs;
	std::size_t n = 1 + rng() % 4;
	for (std::size_t i = 0; i < n; ++i) {
		Formula lit = Formula::atom(rng() % 2 ? "p" : "q", rng() % 2);
		fs.push_back(random_word(rng, 3).apply(lit));
	}
	return Sequent(fs);
}

} // namespace

TEST_CASE("modality words")
{
	ModalityWord w = ModalityWord::parse("!?");
	CHECK(w.size() == 2);
	CHECK(w.apply(Formula::atom("p")) == ofcourse(whynot(Formula::atom("p"))));
	CHECK(w.dual().print() == "?!");
	CHECK(ModalityWord::parse("").empty());
	CHECK_THROWS_AS(ModalityWord::parse("!x"), std::invalid_argument);
}

TEST_CASE("canonical forms")
{
	CHECK(canon("") == CanonicalModality::Epsilon);
	CHECK(canon("!!") == CanonicalModality::OfCourse);
	CHECK(canon("???") == CanonicalModality::WhyNot);
	CHECK(canon("!?!?") == CanonicalModality::OfCourseWhyNot);
	CHECK(canon("?!?!?") == CanonicalModality::WhyNotOfCourseWhyNot);
	CHECK(canon("!!?!!") == CanonicalModality::OfCourseWhyNotOfCourse);
	CHECK(canon("?!!??!") == CanonicalModality::WhyNotOfCourse);

	for (CanonicalModality m : all_canonical_modalities) {
		CHECK(canonicalize(word_of(m)) == m);
		CHECK(dual(dual(m)) == m);
		CHECK(to_string(m) == word_of(m).print());
	}
	CHECK(dual(CanonicalModality::OfCourseWhyNot) == CanonicalModality::WhyNotOfCourse);

	std::size_t steps = 0;
	canonicalize(ModalityWord::parse("!!!!"), &steps);
	CHECK(steps > 0);
}

TEST_CASE("canonicalization commutes with duality and is idempotent")
{
	std::mt19937_64 rng(41);
	for (int i = 0; i < 2000; ++i) {
		ModalityWord w = random_word(rng, 12);
		CanonicalModality c = canonicalize(w);
		CHECK(canonicalize(word_of(c)) == c);
		CHECK(canonicalize(w.dual()) == dual(c));
	}
}

TEST_CASE("the order on canonical modalities")
{
	using C = CanonicalModality;
	CHECK(modality_leq(C::OfCourse, C::Epsilon));
	CHECK(modality_leq(C::Epsilon, C::WhyNot));
	CHECK(modality_leq(C::OfCourse, C::WhyNot));
	CHECK(modality_leq(C::OfCourseWhyNotOfCourse, C::WhyNotOfCourseWhyNot));
	CHECK_FALSE(modality_leq(C::OfCourseWhyNot, C::WhyNotOfCourse));
	CHECK_FALSE(modality_leq(C::WhyNotOfCourse, C::OfCourseWhyNot));
	CHECK_FALSE(modality_leq(C::Epsilon, C::OfCourseWhyNot));
	for (C a : all_canonical_modalities) {
		CHECK(modality_leq(a, a));
		CHECK(modality_leq(C::OfCourse, a));
		CHECK(modality_leq(a, C::WhyNot));
		for (C b : all_canonical_modalities) {
			if (a != b)
				CHECK_FALSE((modality_leq(a, b) && modality_leq(b, a)));
			/* Duality reverses the order. */
			CHECK(modality_leq(a, b) == modality_leq(dual(b), dual(a)));
			for (C c : all_canonical_modalities)
				if (modality_leq(a, b) && modality_leq(b, c))
					CHECK(modality_leq(a, c));
		}
	}
}

TEST_CASE("decomposition")
{
	ModalizedLiteral d = decompose(parse_formula("!?!p^"));
	CHECK(d.modality.print() == "!?!");
	CHECK(d.literal == Formula::atom("p", true));
	CHECK_THROWS_AS(decompose(parse_formula("!(p * q)")), FragmentError);
	CHECK_THROWS_AS(decide_ell(parse_one_sided("|- p & q")), FragmentError);
}

TEST_CASE("deciding modalized literals")
{
	CHECK(ell("|- !p, ?p^") == Verdict::Provable);
	CHECK(ell("|- !p, ?p^", EllMode::Extended) == Verdict::Provable);
	CHECK(ell("|- !!p, ?p^") == Verdict::Provable);
	CHECK(ell("|- !p, !p^") == Verdict::NotProvable);
	CHECK(ell("|- !p, !p^", EllMode::Extended) == Verdict::NotProvable);
	CHECK(ell("|- p") == Verdict::NotProvable);
	CHECK(ell("|- p, p^") == Verdict::Provable);
	CHECK(ell("|- !p, p^") == Verdict::NotProvable);
	CHECK(ell("|- !p, p^", EllMode::Extended) == Verdict::NotProvable);
	CHECK(ell("|- ?p, p^", EllMode::Extended) == Verdict::Provable);
	CHECK(ell("|- ?p, p^") == Verdict::NotProvable);
	CHECK(ell("|- p, ?q, p^", EllMode::Extended) == Verdict::Provable);
	CHECK(ell("|- p, ?q, p^") == Verdict::NotProvable);

	EllResult r = decide_ell(parse_one_sided("|- !?!?p, ?!?!p^"));
	CHECK(r.verdict == Verdict::Provable);
	CHECK(r.steps > 0);
}

TEST_CASE("literal mode accepts some sequents without a proof")
{
	testing::EllOracle oracle;
	for (const char *t : {"|- p, p, p^, p^", "|- p, p^, q, q^"}) {
		Sequent s = parse_one_sided(t);
		CAPTURE(t);
		CHECK(decide_ell(s).verdict == Verdict::Provable);
		CHECK_FALSE(oracle.provable(s));
		CHECK(prove(s).verdict == Verdict::NotProvable);
	}
	nlohmann::json j = ell_discrepancy(parse_one_sided("|- p, p, p^, p^"), Verdict::Provable, Verdict::NotProvable);
	CHECK(j.at("sequent") == "|- p, p, p^, p^");
	CHECK(j.at("literal_verdict") == "provable");
	CHECK(j.at("oracle_verdict") == "not_provable");
}

TEST_CASE("literal verdicts ignore the order of the sequent")
{
	std::mt19937_64 rng(42);
	for (int i = 0; i < 800; ++i) {
		Sequent s = random_ell_sequent(rng);
		std::vector<Formula> fs(s.begin(), s.end());
		std::shuffle(fs.begin(), fs.end(), rng);
		Sequent t(fs);
		CAPTURE(print(s));
		CHECK(decide_ell(s).verdict == decide_ell(t).verdict);
	}
}

TEST_CASE("extended mode accepts everything literal mode accepts")
{
	std::mt19937_64 rng(43);
	for (int i = 0; i < 2000; ++i) {
		Sequent s = random_ell_sequent(rng);
		CAPTURE(print(s));
		if (decide_ell(s).verdict == Verdict::Provable)
			CHECK(decide_ell(s, EllMode::Extended).verdict == Verdict::Provable);
	}
}

TEST_CASE("extended verdicts can depend on the order")
{
	/* The first order pairs ?!p with ?p^ and strands p. */
	CHECK(ell("|- ?!p, ?p^, p", EllMode::Extended) == Verdict::NotProvable);
	CHECK(ell("|- p, ?!p, ?p^", EllMode::Extended) == Verdict::Provable);
	CHECK(ell("|- ?q, ?!q^, !?q, !q^", EllMode::Extended) == Verdict::Provable);
}

TEST_CASE("the search oracle agrees with proof search")
{
	std::mt19937_64 rng(44);
	testing::EllOracle oracle;
	int decisive = 0;
	for (int i = 0; i < 600; ++i) {
		Sequent s = random_ell_sequent(rng);
		Verdict v = prove(s).verdict;
		if (v == Verdict::Unknown)
			continue;
		++decisive;
		CAPTURE(print(s));
		CHECK(oracle.provable(s) == (v == Verdict::Provable));
	}
	CHECK(decisive > 400);
}
