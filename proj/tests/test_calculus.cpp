/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include <doctest.h>

#include <functional>
#include <random>

#include "llwb/calculus/proof.hpp"
#include "llwb/calculus/prove.hpp"
#include "llwb/core/syntax.hpp"
#include "support/corpus.hpp"

using namespace llwb;

namespace {

const Formula p = Formula::atom("p"), q = Formula::atom("q");

Verdict verdict(const char *text, std::size_t depth = 0)
{
	ProveOptions o;
	o.depth_limit = depth;
	return prove(parse_one_sided(text), o).verdict;
}

void each_formula(const ProofTree &t, const std::function<void(const Formula &)> &f)
{
	for (const auto &x : t.conclusion)
		f(x);
	for (const auto &pr : t.premises)
		each_formula(*pr, f);
}

} // namespace

TEST_CASE("two-sided sequents move the antecedent across")
{
	CHECK(normalize_two_sided(parse_sequent("p |- p")) == Sequent{negate(p), p});
	CHECK(normalize_two_sided(parse_sequent("p, p -o q |- q")) ==
	      Sequent{negate(p), tensor(p, negate(q)), q});
	CHECK(normalize_two_sided(parse_sequent("|- 1")) == Sequent{Formula::one()});
}

TEST_CASE("the checker accepts rule instances and rejects the rest")
{
	ProofPtr id = make_proof(Sequent{p, negate(p)}, Rule::Id, std::nullopt);
	CHECK(check_proof(*id));

	SUBCASE("context-sharing tensor")
	{
		/* |- p * p, p^, p^ would need the p^ split; here both premises keep
		 * an extra copy of the context. */
		Sequent ctx{tensor(p, q), negate(p), negate(q), Formula::top()};
		ProofPtr left = make_proof(Sequent{p, negate(p), Formula::top()}, Rule::Top, 2);
		ProofPtr right = make_proof(Sequent{q, negate(q), Formula::top()}, Rule::Top, 2);
		ProofPtr bad = make_proof(Sequent{tensor(p, q), negate(p), negate(q), Formula::top()}, Rule::Tensor, 0,
		                          {left, right});
		CHECK_FALSE(check_proof(*bad));
	}
	SUBCASE("additive cut")
	{
		Sequent gamma{q, negate(q)};
		ProofPtr a = make_proof(Sequent{p, q, negate(q), Formula::top()}, Rule::Top, 3);
		ProofPtr b = make_proof(Sequent{negate(p), q, negate(q), Formula::top()}, Rule::Top, 3);
		ProofPtr cut = make_proof(Sequent{q, negate(q), Formula::top()}, Rule::Cut, std::nullopt, {a, b});
		CHECK_FALSE(check_proof(*cut));
	}
	SUBCASE("promotion with a non-? context")
	{
		ProofPtr inner = make_proof(Sequent{p, negate(p)}, Rule::Id, std::nullopt);
		ProofPtr bad = make_proof(Sequent{ofcourse(p), negate(p)}, Rule::OfCourse, 0, {inner});
		CheckResult c = check_proof(*bad);
		CHECK_FALSE(c);
		CHECK_FALSE(c.diagnostic.empty());
	}
	SUBCASE("id on non-dual formulas")
	{
		CHECK_FALSE(check_proof(*make_proof(Sequent{p, q}, Rule::Id, std::nullopt)));
	}
}

TEST_CASE("prove on the basic examples")
{
	CHECK(verdict("|- p, p^") == Verdict::Provable);
	CHECK(verdict("|- p | p^") == Verdict::Provable);
	CHECK(verdict("|- p + p^") == Verdict::NotProvable);
	CHECK(verdict("|- p * p^") == Verdict::NotProvable);
	CHECK(verdict("|- (p * (q * r)) -o ((p * q) * r)") == Verdict::Provable);
	CHECK(verdict("|- p +> p") == Verdict::NotProvable);
	CHECK(verdict("p, p +> q |- q") == Verdict::NotProvable);
	CHECK(verdict("p |- p +> p") == Verdict::Provable);
	CHECK(verdict("|- top, 0") == Verdict::Provable);
	CHECK(verdict("|- 1, bot") == Verdict::Provable);
	CHECK(verdict("|-") == Verdict::NotProvable);
	CHECK(verdict("!p |- !p * !p") == Verdict::Provable);
	CHECK(verdict("?p |- p") != Verdict::Provable);
}

TEST_CASE("proofs check, use subformulas only and are deterministic")
{
	testing::Alphabet al{testing::literals({"p", "q"}),
	                     {Connective::Tensor, Connective::Par, Connective::Plus, Connective::With},
	                     {Modality::OfCourse, Modality::WhyNot},
	                     false};
	al.leaves.push_back(Formula::one());
	al.leaves.push_back(Formula::top());
	std::mt19937_64 rng(21);
	int provable = 0;
	for (int i = 0; i < 400; ++i) {
		Formula a = testing::random_formula(al, 1 + i % 7, rng);
		Sequent s{negate(a), a};
		if (i % 2)
			s = Sequent{a, testing::random_formula(al, 1 + i % 5, rng)};
		SearchResult r = prove(s);
		if (r.verdict != Verdict::Provable)
			continue;
		++provable;
		REQUIRE(r.proof);
		CHECK(check_proof(*r.proof));
		CHECK_FALSE(uses_rule(*r.proof, Rule::Cut));
		each_formula(*r.proof, [&](const Formula &f) {
			bool sub = false;
			for (const auto &c : s)
				sub = sub || is_subformula(f, c);
			CHECK(sub);
		});
		SearchResult again = prove(s);
		CHECK(proof_to_json(*again.proof) == proof_to_json(*r.proof));
	}
	CHECK(provable > 200);
}

TEST_CASE("proof JSON round trips and matches the interchange shape")
{
	SearchResult r = prove(parse_one_sided("|- p * q, p^ | q^"));
	REQUIRE(r.proof);
	nlohmann::json j = proof_to_json(*r.proof);
	CHECK(j.contains("rule"));
	CHECK(j.contains("conclusion"));
	CHECK(j.contains("principal"));
	CHECK(j.contains("premises"));
	ProofPtr back = proof_from_json(j);
	CHECK(proof_to_json(*back) == j);
	CHECK(check_proof(*back));
	CHECK_THROWS(proof_from_json(nlohmann::json{{"rule", "nonsense"}}));
}

TEST_CASE("depth limits yield unknown, never a refutation")
{
	ProveOptions o;
	o.depth_limit = 2;
	SearchResult r = prove(parse_one_sided("|- (p | q) | r, (r^ * p^) * q^"), o);
	CHECK(r.verdict == Verdict::Unknown);
	CHECK(r.proof == nullptr);
	CHECK(default_depth(parse_one_sided("|- p, p^")) >= 2);
}

TEST_CASE("quick refutation is sound")
{
	CHECK(quick_refute(parse_one_sided("|- p, q^")));
	CHECK(quick_refute(parse_one_sided("|- 0, p, p^")));
	CHECK_FALSE(quick_refute(parse_one_sided("|- top, p")));
	CHECK_FALSE(quick_refute(parse_one_sided("|- p, p^")));
}
