/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include <doctest.h>

#include "llwb/core/fragment.hpp"
#include "llwb/core/syntax.hpp"
#include "llwb/proofnet/proofnet.hpp"

using namespace llwb;

namespace {

ProofNet net_of(const char *text)
{
	SearchResult r = prove(parse_one_sided(text));
	REQUIRE(r.verdict == Verdict::Provable);
	return from_proof(*r.proof);
}

Verdict mll(const char *text) { return decide_mll(parse_one_sided(text)).verdict; }

} // namespace

TEST_CASE("translated proofs are well formed and contract")
{
	for (const char *s : {"|- p, p^", "|- p | p^", "|- p * q, p^, q^", "|- (p * q) -o (q * p)",
	                      "|- (p * (q * r)) -o ((p * q) * r)", "|- p | q, p^ * q^"}) {
		CAPTURE(s);
		ProofNet net = net_of(s);
		CHECK(well_formedness(net).empty());
		ContractResult c = contract(net);
		CHECK(c.valid);
		CHECK(c.steps >= net.links.size());
		for (std::uint64_t seed = 0; seed < 8; ++seed)
			CHECK(contract(net, seed).valid);
	}
}

TEST_CASE("compound axioms are expanded")
{
	Formula pq = tensor(Formula::atom("p"), Formula::atom("q"));
	ProofNet net = from_proof(*make_proof(Sequent{pq, negate(pq)}, Rule::Id, std::nullopt));
	std::size_t axioms = 0;
	for (const auto &l : net.links)
		axioms += l.kind == LinkKind::Axiom;
	CHECK(axioms == 2);
	CHECK(contract(net).valid);
}

TEST_CASE("non-MLL proofs are refused")
{
	SearchResult r = prove(parse_one_sided("|- p & p, p^"));
	REQUIRE(r.proof);
	CHECK_THROWS_AS(from_proof(*r.proof), FragmentError);
	CHECK_THROWS_AS(decide_mll(parse_one_sided("|- !p, ?p^")), FragmentError);
}

TEST_CASE("changing one link breaks correctness")
{
	ProofNet net = net_of("|- p | p^");
	for (auto &l : net.links)
		if (l.kind == LinkKind::Par)
			l.kind = LinkKind::Tensor;
	ContractResult c = contract(net);
	CHECK_FALSE(c.valid);
	CHECK_FALSE(c.reason.empty());

	ProofNet two = net_of("|- p * q, p^, q^");
	for (auto &l : two.links)
		if (l.kind == LinkKind::Tensor)
			l.kind = LinkKind::Par;
	CHECK_FALSE(contract(two).valid);
}

TEST_CASE("linking enumeration decides MLL")
{
	CHECK(mll("|- p, p^") == Verdict::Provable);
	CHECK(mll("|- p * p^") == Verdict::NotProvable);
	CHECK(mll("|- p | p^") == Verdict::Provable);
	CHECK(mll("|- p, q^") == Verdict::NotProvable);
	CHECK(mll("|- p | q, p^ * q^") == Verdict::Provable);
	CHECK(mll("|- p | q, p^ | q^") == Verdict::NotProvable);
	CHECK(mll("|- p, p^, q, q^") == Verdict::NotProvable);

	MllResult r = decide_mll(parse_one_sided("|- p * q, p^, q^"));
	REQUIRE(r.net);
	CHECK(contract(*r.net).valid);
	CHECK(r.linkings_tried >= 1);

	MllResult u = decide_mll(parse_one_sided("|- 1"));
	CHECK(u.verdict == Verdict::Provable);
	CHECK(u.routed.has_value());
}

TEST_CASE("explicit linkings")
{
	Sequent s = parse_one_sided("|- p * q, p^, q^");
	auto leaves = atom_leaves(s);
	REQUIRE(leaves.size() == 4);
	CHECK(leaves[0] == Formula::atom("p"));
	CHECK(contract(structure_with_linking(s, {{0, 2}, {1, 3}})).valid);

	Sequent t = parse_one_sided("|- p * p^, p, p^");
	CHECK(contract(structure_with_linking(t, {{0, 3}, {2, 1}})).valid);
	CHECK_FALSE(contract(structure_with_linking(t, {{0, 1}, {2, 3}})).valid);
}

TEST_CASE("nets round trip through JSON and render as dot")
{
	ProofNet net = net_of("|- (p * q) -o (q * p)");
	nlohmann::json j = net_to_json(net);
	ProofNet back = net_from_json(j);
	CHECK(net_to_json(back) == j);
	CHECK(back.links == net.links);
	CHECK(contract(back).valid);
	std::string dot = net_to_dot(net);
	CHECK(dot.find("digraph") != std::string::npos);
	CHECK(to_string(LinkKind::Axiom) == "axiom");
}
