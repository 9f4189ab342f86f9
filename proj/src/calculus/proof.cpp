/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/calculus/proof.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "llwb/core/syntax.hpp"

namespace llwb {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 14> kRuleNames{{
	{Rule::Id, "id"},
	{Rule::Cut, "cut"},
	{Rule::Top, "top"},
	{Rule::With, "with"},
	{Rule::Plus1, "plus1"},
	{Rule::Plus2, "plus2"},
	{Rule::One, "one"},
	{Rule::False, "false"},
	{Rule::Tensor, "tensor"},
	{Rule::Par, "par"},
	{Rule::OfCourse, "ofcourse"},
	{Rule::Weakening, "weakening"},
	{Rule::Dereliction, "dereliction"},
	{Rule::Contraction, "contraction"},
}};

std::size_t arity(Rule r)
{
	switch (r) {
	case Rule::Id:
	case Rule::Top:
	case Rule::One:
		return 0;
	case Rule::Cut:
	case Rule::With:
	case Rule::Tensor:
		return 2;
	default:
		return 1;
	}
}

bool same(std::vector<Formula> a, std::vector<Formula> b)
{
	if (a.size() != b.size())
		return false;
	std::sort(a.begin(), a.end());
	std::sort(b.begin(), b.end());
	return a == b;
}

std::vector<Formula> plus_formulas(std::vector<Formula> base, std::initializer_list<Formula> extra)
{
	for (const auto &f : extra)
		base.push_back(f);
	return base;
}

/* Removes one occurrence of f; false if absent. */
bool remove_one(std::vector<Formula> &v, const Formula &f)
{
	auto it = std::find(v.begin(), v.end(), f);
	if (it == v.end())
		return false;
	v.erase(it);
	return true;
}

std::string check_node(const ProofTree &t)
{
	const auto &c = t.conclusion;
	if (t.premises.size() != arity(t.rule))
		return std::string(to_string(t.rule)) + " expects " + std::to_string(arity(t.rule)) + " premise(s), got " +
		       std::to_string(t.premises.size());
	for (const auto &p : t.premises)
		if (!p)
			return "null premise";

	bool needs_principal = t.rule != Rule::Id && t.rule != Rule::One && t.rule != Rule::Cut && t.rule != Rule::Top;
	if (needs_principal && !t.principal)
		return std::string(to_string(t.rule)) + " requires a principal formula";
	if (t.principal && *t.principal >= c.size())
		return "principal index out of range";

	std::vector<Formula> rest;
	std::optional<Formula> main;
	if (t.principal) {
		main = c[*t.principal];
		rest = c.without(*t.principal).formulas();
	}
	auto prem = [&](std::size_t i) { return t.premises[i]->conclusion.formulas(); };

	switch (t.rule) {
	case Rule::Id:
		if (c.size() != 2 || negate(c[0]) != c[1])
			return "id must conclude exactly A, A^";
		return {};
	case Rule::One:
		if (c.size() != 1 || !c[0].is(UnitKind::One))
			return "one must conclude exactly 1";
		return {};
	case Rule::Top:
		if (main) {
			if (!main->is(UnitKind::Top))
				return "top principal is not top";
		} else if (std::none_of(c.begin(), c.end(), [](const Formula &f) { return f.is(UnitKind::Top); })) {
			return "top rule without top in the conclusion";
		}
		return {};
	case Rule::Cut: {
		auto p1 = prem(0), p2 = prem(1);
		for (std::size_t i = 0; i < p1.size(); ++i) {
			auto left = p1;
			left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
			auto right = p2;
			if (!remove_one(right, negate(p1[i])))
				continue;
			left.insert(left.end(), right.begin(), right.end());
			if (same(left, c.formulas()))
				return {};
		}
		return "premises do not form a cut on the conclusion";
	}
	case Rule::With:
		if (!main->is(Connective::With))
			return "with principal is not a with";
		if (!same(prem(0), plus_formulas(rest, {main->left()})) || !same(prem(1), plus_formulas(rest, {main->right()})))
			return "with premises must be Gamma, A and Gamma, B";
		return {};
	case Rule::Plus1:
	case Rule::Plus2:
		if (!main->is(Connective::Plus))
			return "plus principal is not a plus";
		if (!same(prem(0), plus_formulas(rest, {t.rule == Rule::Plus1 ? main->left() : main->right()})))
			return "plus premise does not match the chosen disjunct";
		return {};
	case Rule::False:
		if (!main->is(UnitKind::Bot))
			return "false principal is not bot";
		if (!same(prem(0), rest))
			return "false premise must be the context";
		return {};
	case Rule::Par:
		if (!main->is(Connective::Par))
			return "par principal is not a par";
		if (!same(prem(0), plus_formulas(rest, {main->left(), main->right()})))
			return "par premise must be Gamma, A, B";
		return {};
	case Rule::Tensor: {
		if (!main->is(Connective::Tensor))
			return "tensor principal is not a tensor";
		auto l = prem(0), r = prem(1);
		if (!remove_one(l, main->left()) || !remove_one(r, main->right()))
			return "tensor premises must contain A and B";
		l.insert(l.end(), r.begin(), r.end());
		if (!same(l, rest))
			return "tensor premises must split the context";
		return {};
	}
	case Rule::OfCourse:
		if (!main->is(Modality::OfCourse))
			return "ofcourse principal is not !";
		for (const auto &f : rest)
			if (!f.is(Modality::WhyNot))
				return "ofcourse context must be ?-formulas only";
		if (!same(prem(0), plus_formulas(rest, {main->body()})))
			return "ofcourse premise must be ?Gamma, A";
		return {};
	case Rule::Weakening:
		if (!main->is(Modality::WhyNot))
			return "weakening principal is not ?";
		if (!same(prem(0), rest))
			return "weakening premise must be the context";
		return {};
	case Rule::Dereliction:
		if (!main->is(Modality::WhyNot))
			return "dereliction principal is not ?";
		if (!same(prem(0), plus_formulas(rest, {main->body()})))
			return "dereliction premise must be Gamma, A";
		return {};
	case Rule::Contraction:
		if (!main->is(Modality::WhyNot))
			return "contraction principal is not ?";
		if (!same(prem(0), plus_formulas(rest, {*main, *main})))
			return "contraction premise must be Gamma, ?A, ?A";
		return {};
	}
	return "unknown rule";
}

bool check_rec(const ProofTree &t, CheckResult &out)
{
	if (auto msg = check_node(t); !msg.empty()) {
		out.ok = false;
		out.diagnostic = std::string(to_string(t.rule)) + " at " + print(t.conclusion) + ": " + msg;
		return false;
	}
	for (std::size_t i = 0; i < t.premises.size(); ++i) {
		out.path.push_back(i);
		if (!check_rec(*t.premises[i], out))
			return false;
		out.path.pop_back();
	}
	return true;
}

} // namespace

std::string_view to_string(Rule r)
{
	for (const auto &[k, n] : kRuleNames)
		if (k == r)
			return n;
	return "?";
}

std::optional<Rule> rule_from_string(std::string_view s)
{
	for (const auto &[k, n] : kRuleNames)
		if (n == s)
			return k;
	return std::nullopt;
}

ProofPtr make_proof(Sequent conclusion, Rule rule, std::optional<std::size_t> principal,
                    std::vector<ProofPtr> premises)
{
	return std::make_shared<const ProofTree>(
	    ProofTree{std::move(conclusion), rule, principal, std::move(premises)});
}

CheckResult check_proof(const ProofTree &t)
{
	CheckResult r;
	check_rec(t, r);
	return r;
}

std::size_t proof_size(const ProofTree &t)
{
	std::size_t n = 1;
	for (const auto &p : t.premises)
		n += proof_size(*p);
	return n;
}

std::size_t proof_height(const ProofTree &t)
{
	std::size_t h = 0;
	for (const auto &p : t.premises)
		h = std::max(h, proof_height(*p));
	return h + 1;
}

bool uses_rule(const ProofTree &t, Rule r)
{
	if (t.rule == r)
		return true;
	return std::any_of(t.premises.begin(), t.premises.end(), [&](const ProofPtr &p) { return uses_rule(*p, r); });
}

nlohmann::json proof_to_json(const ProofTree &t)
{
	nlohmann::json j;
	j["rule"] = std::string(to_string(t.rule));
	j["conclusion"] = print(t.conclusion);
	j["principal"] = t.principal ? nlohmann::json(*t.principal) : nlohmann::json(nullptr);
	j["premises"] = nlohmann::json::array();
	for (const auto &p : t.premises)
		j["premises"].push_back(proof_to_json(*p));
	return j;
}

ProofPtr proof_from_json(const nlohmann::json &j)
{
	if (!j.is_object())
		throw std::invalid_argument("proof node must be an object");
	if (!j.contains("rule") || !j["rule"].is_string())
		throw std::invalid_argument("proof node lacks a string 'rule'");
	auto rule = rule_from_string(j["rule"].get<std::string>());
	if (!rule)
		throw std::invalid_argument("unknown rule '" + j["rule"].get<std::string>() + "'");
	if (!j.contains("conclusion") || !j["conclusion"].is_string())
		throw std::invalid_argument("proof node lacks a string 'conclusion'");
	Sequent conclusion = parse_one_sided(j["conclusion"].get<std::string>());
	std::optional<std::size_t> principal;
	if (j.contains("principal") && !j["principal"].is_null()) {
		if (!j["principal"].is_number_unsigned())
			throw std::invalid_argument("'principal' must be a non-negative integer or null");
		principal = j["principal"].get<std::size_t>();
	}
	std::vector<ProofPtr> premises;
	if (j.contains("premises")) {
		if (!j["premises"].is_array())
			throw std::invalid_argument("'premises' must be an array");
		for (const auto &p : j["premises"])
			premises.push_back(proof_from_json(p));
	}
	return make_proof(std::move(conclusion), *rule, principal, std::move(premises));
}

} // namespace llwb
