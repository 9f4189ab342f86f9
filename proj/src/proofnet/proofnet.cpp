/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/proofnet/proofnet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "llwb/core/fragment.hpp"
#include "llwb/core/syntax.hpp"

namespace llwb {

std::string_view to_string(LinkKind k)
{
	switch (k) {
	case LinkKind::Axiom: return "axiom";
	case LinkKind::Cut: return "cut";
	case LinkKind::Tensor: return "tensor";
	case LinkKind::Par: return "par";
	}
	return "?";
}

namespace {

std::optional<LinkKind> link_kind_from_string(std::string_view s)
{
	for (auto k : {LinkKind::Axiom, LinkKind::Cut, LinkKind::Tensor, LinkKind::Par})
		if (to_string(k) == s)
			return k;
	return std::nullopt;
}

class Translator {
public:
	ProofNet net;

	std::vector<std::size_t> run(const ProofTree &t)
	{
		const auto &c = t.conclusion.formulas();
		switch (t.rule) {
		case Rule::Id: {
			auto [a, b] = expand(c[0]);
			return {a, b};
		}
		case Rule::Par: {
			auto occ = run(*t.premises[0]);
			const Formula &f = c[*t.principal];
			Pool pool = pool_of(*t.premises[0], occ);
			std::size_t l = pool.take(f.left()), r = pool.take(f.right());
			std::size_t o = add(f);
			net.links.push_back({LinkKind::Par, {l, r}, {o}});
			pool.add(f, o);
			return pool.assign(t.conclusion);
		}
		case Rule::Tensor: {
			auto o1 = run(*t.premises[0]);
			auto o2 = run(*t.premises[1]);
			const Formula &f = c[*t.principal];
			Pool p1 = pool_of(*t.premises[0], o1), p2 = pool_of(*t.premises[1], o2);
			std::size_t l = p1.take(f.left()), r = p2.take(f.right());
			std::size_t o = add(f);
			net.links.push_back({LinkKind::Tensor, {l, r}, {o}});
			p1.merge(p2);
			p1.add(f, o);
			return p1.assign(t.conclusion);
		}
		case Rule::Cut: {
			auto o1 = run(*t.premises[0]);
			auto o2 = run(*t.premises[1]);
			const auto &c1 = t.premises[0]->conclusion.formulas();
			const auto &c2 = t.premises[1]->conclusion.formulas();
			for (std::size_t i = 0; i < c1.size(); ++i) {
				Formula dualf = negate(c1[i]);
				for (std::size_t j = 0; j < c2.size(); ++j) {
					if (c2[j] != dualf)
						continue;
					Pool p1 = pool_of(*t.premises[0], o1), p2 = pool_of(*t.premises[1], o2);
					p1.erase(i);
					p2.erase(j);
					p1.merge(p2);
					if (!p1.matches(t.conclusion))
						continue;
					net.links.push_back({LinkKind::Cut, {o1[i], o2[j]}, {}});
					return p1.assign(t.conclusion);
				}
			}
			throw std::invalid_argument("cut node does not match its premises");
		}
		default:
			throw FragmentError("rule '" + std::string(to_string(t.rule)) + "' has no proof-net translation");
		}
	}

private:
	/* Formula occurrences available to be matched against a conclusion. */
	struct Pool {
		std::vector<std::pair<Formula, std::size_t>> items;
		std::vector<char> used;

		void add(const Formula &f, std::size_t o)
		{
			items.emplace_back(f, o);
			used.push_back(0);
		}
		void erase(std::size_t i) { used[i] = 1; }
		void merge(const Pool &o)
		{
			for (std::size_t i = 0; i < o.items.size(); ++i)
				if (!o.used[i])
					add(o.items[i].first, o.items[i].second);
		}
		std::size_t take(const Formula &f)
		{
			for (std::size_t i = 0; i < items.size(); ++i)
				if (!used[i] && items[i].first == f) {
					used[i] = 1;
					return items[i].second;
				}
			throw std::invalid_argument("premise lacks expected formula " + print(f));
		}
		bool matches(const Sequent &s) const
		{
			std::vector<Formula> rest;
			for (std::size_t i = 0; i < items.size(); ++i)
				if (!used[i])
					rest.push_back(items[i].first);
			return Sequent(rest) == s;
		}
		std::vector<std::size_t> assign(const Sequent &s)
		{
			if (!matches(s))
				throw std::invalid_argument("conclusion does not match premises: " + print(s));
			std::vector<std::size_t> out;
			for (const auto &f : s)
				out.push_back(take(f));
			return out;
		}
	};

	static Pool pool_of(const ProofTree &t, const std::vector<std::size_t> &occ)
	{
		Pool p;
		for (std::size_t i = 0; i < occ.size(); ++i)
			p.add(t.conclusion[i], occ[i]);
		return p;
	}

	std::size_t add(const Formula &f)
	{
		net.occurrences.push_back(f);
		return net.occurrences.size() - 1;
	}

	/* Eta-expansion of an axiom on a (possibly compound) formula. */
	std::pair<std::size_t, std::size_t> expand(const Formula &a)
	{
		if (a.is_atom()) {
			std::size_t x = add(a), y = add(negate(a));
			net.links.push_back({LinkKind::Axiom, {}, {x, y}});
			return {x, y};
		}
		if (!(a.is(Connective::Tensor) || a.is(Connective::Par)))
			throw FragmentError("axiom on " + print(a) + " cannot be expanded into a proof net");
		auto [l, ld] = expand(a.left());
		auto [r, rd] = expand(a.right());
		Formula da = negate(a);
		std::size_t x = add(a), y = add(da);
		net.links.push_back({a.is(Connective::Tensor) ? LinkKind::Tensor : LinkKind::Par, {l, r}, {x}});
		net.links.push_back({da.is(Connective::Tensor) ? LinkKind::Tensor : LinkKind::Par, {ld, rd}, {y}});
		return {x, y};
	}
};

struct Dsu {
	std::vector<std::size_t> parent;
	explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	std::size_t find(std::size_t x)
	{
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/* Builds occurrences and tensor/par links for f; returns the root occurrence
 * and appends literal leaves left to right. */
std::size_t build_tree(ProofNet &net, const Formula &f, std::vector<std::size_t> &leaves)
{
	if (f.is_atom()) {
		net.occurrences.push_back(f);
		leaves.push_back(net.occurrences.size() - 1);
		return leaves.back();
	}
	if (!(f.is(Connective::Tensor) || f.is(Connective::Par)))
		throw FragmentError("proof structures cover tensor, par and literals only, got " + print(f));
	std::size_t l = build_tree(net, f.left(), leaves);
	std::size_t r = build_tree(net, f.right(), leaves);
	net.occurrences.push_back(f);
	std::size_t o = net.occurrences.size() - 1;
	net.links.push_back({f.is(Connective::Tensor) ? LinkKind::Tensor : LinkKind::Par, {l, r}, {o}});
	return o;
}

bool has_unit(const Formula &f)
{
	if (f.is_unit())
		return true;
	if (f.is_binary())
		return has_unit(f.left()) || has_unit(f.right());
	if (f.is_modal())
		return has_unit(f.body());
	return false;
}

} // namespace

std::string well_formedness(const ProofNet &net)
{
	std::size_t n = net.occurrences.size();
	std::vector<int> as_premise(n, 0), as_conclusion(n, 0);
	auto bad = [&](std::size_t o) { return o >= n; };
	for (std::size_t li = 0; li < net.links.size(); ++li) {
		const Link &l = net.links[li];
		std::string where = std::string(to_string(l.kind)) + " link #" + std::to_string(li);
		std::size_t np = l.kind == LinkKind::Axiom ? 0 : 2;
		std::size_t nc = l.kind == LinkKind::Cut ? 0 : l.kind == LinkKind::Axiom ? 2 : 1;
		if (l.premises.size() != np || l.conclusions.size() != nc)
			return where + " has the wrong number of endpoints";
		for (auto o : l.premises)
			if (bad(o))
				return where + " refers to a missing occurrence";
			else
				++as_premise[o];
		for (auto o : l.conclusions)
			if (bad(o))
				return where + " refers to a missing occurrence";
			else
				++as_conclusion[o];
		const auto &occ = net.occurrences;
		switch (l.kind) {
		case LinkKind::Axiom:
			if (negate(occ[l.conclusions[0]]) != occ[l.conclusions[1]])
				return where + " does not join dual formulas";
			break;
		case LinkKind::Cut:
			if (negate(occ[l.premises[0]]) != occ[l.premises[1]])
				return where + " does not join dual formulas";
			break;
		case LinkKind::Tensor:
		case LinkKind::Par: {
			Connective c = l.kind == LinkKind::Tensor ? Connective::Tensor : Connective::Par;
			if (occ[l.conclusions[0]] != Formula::binary(c, occ[l.premises[0]], occ[l.premises[1]]))
				return where + " conclusion is not built from its premises";
			break;
		}
		}
	}
	std::vector<int> is_final(n, 0);
	for (auto o : net.conclusions) {
		if (bad(o))
			return "conclusion refers to a missing occurrence";
		++is_final[o];
	}
	for (std::size_t o = 0; o < n; ++o) {
		if (as_conclusion[o] != 1)
			return "occurrence " + std::to_string(o) + " (" + print(net.occurrences[o]) +
			       ") must be the conclusion of exactly one link";
		if (as_premise[o] + is_final[o] != 1)
			return "occurrence " + std::to_string(o) + " (" + print(net.occurrences[o]) +
			       ") must be a premise of exactly one link or a conclusion of the net";
	}
	return {};
}

ProofNet from_proof(const ProofTree &t)
{
	if (auto c = check_proof(t); !c.ok)
		throw std::invalid_argument("not a valid proof: " + c.diagnostic);
	for (const auto &f : t.conclusion)
		if (has_unit(f) || !leq(classify_fragment(f), Fragment::MLL))
			throw FragmentError("proof nets are built for unit-free MLL only");
	Translator tr;
	tr.net.conclusions = tr.run(t);
	return std::move(tr.net);
}

ContractResult contract(const ProofNet &net, std::optional<std::uint64_t> seed)
{
	ContractResult out;
	if (auto msg = well_formedness(net); !msg.empty()) {
		out.reason = "malformed: " + msg;
		return out;
	}
	std::size_t n = net.occurrences.size();
	if (n == 0) {
		out.reason = "empty structure";
		return out;
	}
	Dsu dsu(n);
	std::vector<char> born(n, 0);
	std::vector<std::size_t> pending(net.links.size());
	std::iota(pending.begin(), pending.end(), 0);
	std::mt19937_64 rng(seed.value_or(0));

	bool progress = true;
	while (!pending.empty() && progress) {
		progress = false;
		if (seed)
			std::shuffle(pending.begin(), pending.end(), rng);
		std::vector<std::size_t> still;
		for (std::size_t li : pending) {
			const Link &l = net.links[li];
			bool fired = false;
			switch (l.kind) {
			case LinkKind::Axiom:
				dsu.unite(l.conclusions[0], l.conclusions[1]);
				born[l.conclusions[0]] = born[l.conclusions[1]] = 1;
				fired = true;
				break;
			case LinkKind::Cut:
			case LinkKind::Tensor: {
				std::size_t a = l.premises[0], b = l.premises[1];
				if (born[a] && born[b] && dsu.find(a) != dsu.find(b)) {
					dsu.unite(a, b);
					if (l.kind == LinkKind::Tensor) {
						dsu.unite(a, l.conclusions[0]);
						born[l.conclusions[0]] = 1;
					}
					fired = true;
				}
				break;
			}
			case LinkKind::Par: {
				std::size_t a = l.premises[0], b = l.premises[1];
				if (born[a] && born[b] && dsu.find(a) == dsu.find(b)) {
					dsu.unite(a, l.conclusions[0]);
					born[l.conclusions[0]] = 1;
					fired = true;
				}
				break;
			}
			}
			if (fired) {
				++out.steps;
				progress = true;
			} else {
				still.push_back(li);
			}
		}
		pending = std::move(still);
	}
	if (!pending.empty()) {
		std::sort(pending.begin(), pending.end());
		const Link &l = net.links[pending.front()];
		out.reason = "stuck: " + std::string(to_string(l.kind)) + " link #" + std::to_string(pending.front()) +
		             " cannot be contracted";
		return out;
	}
	std::size_t root = dsu.find(0);
	for (std::size_t o = 1; o < n; ++o)
		if (dsu.find(o) != root) {
			out.reason = "contracts to more than one node";
			return out;
		}
	out.valid = true;
	return out;
}

std::vector<Formula> atom_leaves(const Sequent &s)
{
	std::vector<Formula> out;
	auto rec = [&](auto &self, const Formula &f) -> void {
		if (f.is_atom())
			out.push_back(f);
		else if (f.is_binary()) {
			self(self, f.left());
			self(self, f.right());
		} else if (f.is_modal())
			self(self, f.body());
	};
	for (const auto &f : s)
		rec(rec, f);
	return out;
}

ProofNet structure_with_linking(const Sequent &s, const std::vector<std::pair<std::size_t, std::size_t>> &pairs)
{
	ProofNet net;
	std::vector<std::size_t> leaves;
	for (const auto &f : s)
		net.conclusions.push_back(build_tree(net, f, leaves));
	for (auto [a, b] : pairs) {
		if (a >= leaves.size() || b >= leaves.size())
			throw std::invalid_argument("linking refers to a missing leaf");
		net.links.push_back({LinkKind::Axiom, {}, {leaves[a], leaves[b]}});
	}
	return net;
}

MllResult decide_mll(const Sequent &s)
{
	if (!leq(classify_fragment(s), Fragment::MLL))
		throw FragmentError("decide_mll expects an MLL sequent, got " + std::string(to_string(classify_fragment(s))));
	MllResult out;
	for (const auto &f : s)
		if (has_unit(f)) {
			out.routed = prove(s);
			out.verdict = out.routed->verdict;
			return out;
		}
	if (s.empty()) {
		out.verdict = Verdict::NotProvable;
		return out;
	}

	auto leaves = atom_leaves(s);
	std::map<std::string, int> balance;
	for (const auto &l : leaves)
		balance[l.name()] += l.negated() ? -1 : 1;
	for (const auto &[name, b] : balance)
		if (b != 0) {
			out.verdict = Verdict::NotProvable;
			return out;
		}

	ProofNet base = structure_with_linking(s, {});
	std::vector<std::size_t> leaf_occ;
	for (std::size_t o = 0; o < base.occurrences.size(); ++o)
		if (base.occurrences[o].is_atom())
			leaf_occ.push_back(o);

	std::vector<std::size_t> positives;
	for (std::size_t i = 0; i < leaves.size(); ++i)
		if (!leaves[i].negated())
			positives.push_back(i);
	std::vector<char> taken(leaves.size(), 0);
	std::vector<std::pair<std::size_t, std::size_t>> pairs;

	auto rec = [&](auto &self, std::size_t k) -> bool {
		if (k == positives.size()) {
			++out.linkings_tried;
			ProofNet net = base;
			for (auto [a, b] : pairs)
				net.links.push_back({LinkKind::Axiom, {}, {leaf_occ[a], leaf_occ[b]}});
			if (contract(net).valid) {
				out.net = std::move(net);
				return true;
			}
			return false;
		}
		std::size_t p = positives[k];
		for (std::size_t q = 0; q < leaves.size(); ++q) {
			if (taken[q] || !leaves[q].negated() || leaves[q].name() != leaves[p].name())
				continue;
			taken[q] = 1;
			pairs.emplace_back(p, q);
			if (self(self, k + 1))
				return true;
			pairs.pop_back();
			taken[q] = 0;
		}
		return false;
	};
	out.verdict = rec(rec, 0) ? Verdict::Provable : Verdict::NotProvable;
	return out;
}

nlohmann::json net_to_json(const ProofNet &net)
{
	nlohmann::json j;
	j["occurrences"] = nlohmann::json::array();
	for (const auto &f : net.occurrences)
		j["occurrences"].push_back(print(f));
	j["links"] = nlohmann::json::array();
	for (const auto &l : net.links)
		j["links"].push_back({{"kind", to_string(l.kind)}, {"premises", l.premises}, {"conclusions", l.conclusions}});
	j["conclusions"] = net.conclusions;
	return j;
}

ProofNet net_from_json(const nlohmann::json &j)
{
	ProofNet net;
	if (!j.is_object() || !j.contains("occurrences") || !j.contains("links") || !j.contains("conclusions"))
		throw std::invalid_argument("proof net JSON needs occurrences, links and conclusions");
	for (const auto &o : j.at("occurrences"))
		net.occurrences.push_back(parse_formula(o.get<std::string>()));
	for (const auto &l : j.at("links")) {
		auto kind = link_kind_from_string(l.at("kind").get<std::string>());
		if (!kind)
			throw std::invalid_argument("unknown link kind " + l.at("kind").dump());
		net.links.push_back({*kind, l.value("premises", std::vector<std::size_t>{}),
		                     l.value("conclusions", std::vector<std::size_t>{})});
	}
	net.conclusions = j.at("conclusions").get<std::vector<std::size_t>>();
	return net;
}

std::string net_to_dot(const ProofNet &net)
{
	std::ostringstream os;
	os << "digraph proofnet {\n  rankdir=BT;\n  node [shape=plaintext];\n";
	for (std::size_t o = 0; o < net.occurrences.size(); ++o)
		os << "  o" << o << " [label=\"" << print(net.occurrences[o]) << "\"];\n";
	for (std::size_t li = 0; li < net.links.size(); ++li) {
		const Link &l = net.links[li];
		switch (l.kind) {
		case LinkKind::Axiom:
			os << "  o" << l.conclusions[0] << " -> o" << l.conclusions[1]
			   << " [dir=none, style=bold, color=blue, label=\"ax\"];\n";
			break;
		case LinkKind::Cut:
			os << "  o" << l.premises[0] << " -> o" << l.premises[1]
			   << " [dir=none, style=dashed, color=red, label=\"cut\"];\n";
			break;
		case LinkKind::Tensor:
		case LinkKind::Par: {
			const char *lab = l.kind == LinkKind::Tensor ? "*" : "|";
			for (auto p : l.premises)
				os << "  o" << p << " -> o" << l.conclusions[0] << " [label=\"" << lab << "\"];\n";
			break;
		}
		}
	}
	os << "}\n";
	return os.str();
}

} // namespace llwb
