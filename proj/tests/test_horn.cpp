/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include <doctest.h>

#include <random>

#include "llwb/horn/horn.hpp"
#include "support/task_oracle.hpp"

using namespace llwb;

namespace {

using SC = SimpleConjunction;

Verdict horn(const char *text, HornMode mode = HornMode::Exact)
{
	return decide_horn(parse_horn(text), mode).verdict;
}

HornProgram chain(const std::vector<Implication> &steps)
{
	HornProgram p;
	auto node = std::make_shared<ProgramNode>();
	ProgramNodePtr tail = node;
	for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
		auto up = std::make_shared<ProgramNode>();
		up->edges.push_back({*it, std::nullopt, tail});
		tail = up;
	}
	p.root = tail;
	return p;
}

SC random_conj(std::mt19937_64 &rng, bool distinct)
{
	static const char *atoms[] = {"a", "b", "c"};
	SC c;
	int n = std::uniform_int_distribution<int>(0, 2)(rng);
	for (int i = 0; i < n; ++i) {
		std::string a = atoms[rng() % 3];
		if (!distinct || c.count(a) == 0)
			c.add(a);
	}
	return c;
}

} // namespace

TEST_CASE("simple conjunctions are multisets")
{
	SC a{{"p", 2}, {"q", 1}};
	CHECK(a.size() == 3);
	CHECK(a.count("r") == 0);
	CHECK(SC::atom("p").subset_of(a));
	CHECK_FALSE(SC::atom("p", 3).subset_of(a));
	CHECK(a - SC::atom("p") == SC({{"p", 1}, {"q", 1}}));
	CHECK(a + SC::atom("r") == SC({{"p", 2}, {"q", 1}, {"r", 1}}));
	CHECK(SC().empty());
	CHECK(print(SC()) == "1");
}

TEST_CASE("horn sequents parse and print")
{
	HornSequent hs = parse_horn("p^3, [p -o q^2 * r], ![a -o b] |- q^2 * r");
	CHECK(hs.w == SC::atom("p", 3));
	REQUIRE(hs.gamma.size() == 1);
	CHECK(hs.gamma[0] == HornClause::plain(SC::atom("p"), SC({{"q", 2}, {"r", 1}})));
	REQUIRE(hs.delta.size() == 1);
	CHECK_FALSE(hs.delta[0].banged);
	CHECK(hs.z == SC({{"q", 2}, {"r", 1}}));
	HornSequent again = parse_horn(print(hs));
	CHECK(print(again) == print(hs));
	CHECK(looks_like_horn("p, [p -o q] |- q"));
	CHECK_FALSE(looks_like_horn("|- p, p^"));
	CHECK_THROWS_AS(parse_horn("p, [p -o ] |- q"), ParseError);

	HornSequent alt = parse_horn("p, [p -o q + r], [(q -o s) & (r -o s)] |- s");
	CHECK(alt.gamma[0].kind == HornClause::Kind::Plus);
	CHECK(alt.gamma[1].kind == HornClause::Kind::With);
	CHECK(alt.gamma[1].components().size() == 2);
}

TEST_CASE("program execution")
{
	Implication pq{SC::atom("p"), SC::atom("q")}, qr{SC::atom("q"), SC::atom("r")};
	ExecResult e = exec_program(chain({pq, qr}), SC({{"p", 1}, {"s", 1}}));
	CHECK(e.defined);
	REQUIRE(e.leaves.size() == 1);
	CHECK(e.leaves[0] == SC({{"r", 1}, {"s", 1}}));
	CHECK(vertex_count(chain({pq, qr})) == 3);

	ExecResult bad = exec_program(chain({qr, pq}), SC::atom("p"));
	CHECK_FALSE(bad.defined);
	CHECK(bad.undefined_vertex == std::optional<std::size_t>(1));
	CHECK(bad.leaves.empty());
}

TEST_CASE("program validation")
{
	HornSequent hs = parse_horn("p, [p -o q], [q -o r] |- r");
	Implication pq{SC::atom("p"), SC::atom("q")}, qr{SC::atom("q"), SC::atom("r")};
	CHECK(validate_program(chain({pq, qr}), hs));
	CHECK(program_diagnostic(chain({pq, qr}), hs).empty());
	/* A clause used twice, or not at all. */
	CHECK_FALSE(validate_program(chain({pq}), hs));
	CHECK_FALSE(validate_program(chain({pq, qr, qr}), parse_horn("p, [p -o q], [q -o r] |- r")));
	/* An edge that no clause offers. */
	Implication rq{SC::atom("r"), SC::atom("q")};
	CHECK_FALSE(program_diagnostic(chain({pq, qr, rq}), hs).empty());

	HornSequent weak = parse_horn("p, [p -o q * s], [q -o r] |- r");
	Implication pqs{SC::atom("p"), SC({{"q", 1}, {"s", 1}})};
	CHECK_FALSE(validate_program(chain({pqs, qr}), weak));
	CHECK(validate_program(chain({pqs, qr}), weak, HornMode::Weakening));
	CHECK(validate_program(chain({pqs}), weak, HornMode::Weakening) == false);

	nlohmann::json j = program_to_json(chain({pq, qr}));
	CHECK(j.is_object());
}

TEST_CASE("deciding horn sequents")
{
	CHECK(horn("p, [p -o q] |- q") == Verdict::Provable);
	CHECK(horn("p, [p -o q] |- p") == Verdict::NotProvable);
	CHECK(horn("p, [p -o q], [p -o r] |- q") == Verdict::NotProvable);
	CHECK(horn("p, [p -o q], [p -o r] |- q", HornMode::Weakening) == Verdict::Provable);
	CHECK(horn("p * s, [p -o q] |- q", HornMode::Weakening) == Verdict::Provable);
	CHECK(horn("p * s, [p -o q] |- q") == Verdict::NotProvable);
	CHECK(horn("p, ![p -o p * p], [p * p * p -o q] |- q") == Verdict::Provable);
	CHECK(horn("p, [p -o q + r], [q -o s], [r -o s] |- s") == Verdict::NotProvable);
	CHECK(horn("p, [p -o q + r], [(q -o s) & (r -o s)] |- s") == Verdict::Provable);
	/* Committing to one disjunct would wrongly prove this. */
	CHECK(horn("p, [p -o q + r] |- q") == Verdict::NotProvable);
	CHECK(horn("|-") == Verdict::Provable);

	HornResult r = decide_horn(parse_horn("p, [p -o q], [q -o r] |- r"));
	REQUIRE(r.program);
	CHECK(validate_program(*r.program, parse_horn("p, [p -o q], [q -o r] |- r")));

	HornSequent hs = parse_horn("p, [p -o q] |- q");
	TwoSidedSequent ts = to_two_sided(hs);
	CHECK(prove(normalize_two_sided(ts)).verdict == Verdict::Provable);
}

TEST_CASE("3-partition encoding")
{
	PartitionInstance yes = parse_partition("12 1\n4 4 4");
	CHECK(yes.b == 12);
	CHECK(yes.s == std::vector<unsigned>{4, 4, 4});
	CHECK(partition_bound_warning(yes).empty());
	HornSequent hs = encode_3partition(yes);
	CHECK(hs.gamma.size() == 4);
	CHECK(hs.w == SC::atom("p", 3));
	CHECK(decide_horn(hs).verdict == Verdict::Provable);

	PartitionInstance no = parse_partition("12 1\n4 4 5");
	CHECK(decide_horn(encode_3partition(no)).verdict == Verdict::NotProvable);

	CHECK(decide_horn(encode_3partition(parse_partition("15 2\n4 5 6 4 5 6"))).verdict == Verdict::Provable);
	CHECK(decide_horn(encode_3partition(parse_partition("15 2\n4 4 4 6 6 6"))).verdict == Verdict::NotProvable);

	CHECK_FALSE(partition_bound_warning(parse_partition("12 1\n2 4 6")).empty());
	CHECK_THROWS_AS(encode_3partition(parse_partition("12 1\n4 4")), std::invalid_argument);
	CHECK_THROWS_AS(parse_partition("12\n4 4 4"), ParseError);
}

TEST_CASE("task sequents")
{
	TaskSequent ts = parse_task("p * q, [p -> r], [(r -> s) -> u] |- u");
	CHECK(ts.w == SC({{"p", 1}, {"q", 1}}));
	REQUIRE(ts.gamma.size() == 2);
	CHECK(ts.gamma[1].embedded);
	CHECK(print(parse_task(print(ts))) == print(ts));

	HornSequent hs = encode_task_sequent(ts);
	/* One goal clause, k + 1 copies per plain clause, one return clause and
	 * k + 1 plus-clauses per embedded one. */
	CHECK(hs.gamma.size() == 1 + 2 + 1 + 2);
	CHECK_THROWS_AS(encode_task_sequent(parse_task("p, [p -> t] |- t")), std::invalid_argument);
	CHECK_THROWS_AS(encode_task_sequent(parse_task("p |- q * q")), std::invalid_argument);
}

TEST_CASE("task encoding agrees with the task calculus")
{
	std::mt19937_64 rng(17);
	testing::TaskOracle oracle;
	int derivable = 0, total = 0;
	for (int i = 0; i < 150; ++i) {
		TaskSequent ts;
		ts.w = random_conj(rng, false);
		int k = 1 + static_cast<int>(rng() % 2);
		int embedded = 0;
		for (int c = 0; c < k; ++c) {
			TaskClause tc;
			tc.embedded = embedded == 0 && rng() % 3 == 0;
			embedded += tc.embedded;
			if (tc.embedded)
				tc.u = random_conj(rng, false);
			tc.v = random_conj(rng, true);
			tc.y = random_conj(rng, false);
			ts.gamma.push_back(tc);
		}
		ts.z = random_conj(rng, true);
		bool expect = oracle.derivable(ts);
		HornResult r = decide_horn(encode_task_sequent(ts), HornMode::Weakening);
		CAPTURE(print(ts));
		REQUIRE(r.verdict != Verdict::Unknown);
		CHECK((r.verdict == Verdict::Provable) == expect);
		derivable += expect;
		++total;
	}
	CHECK(derivable > 0);
	CHECK(derivable < total);
}
