/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/mall/fmall.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "llwb/core/fragment.hpp"
#include "llwb/core/syntax.hpp"

namespace llwb {

namespace {

using Formulas = std::vector<Formula>;

void require_mall(const Formulas &fs)
{
	for (const auto &f : fs)
		if (!leq(classify_fragment(f), Fragment::MALL))
			throw FragmentError("FMALL expects MALL formulas, got " + print(f));
}

Formulas sorted(Formulas v)
{
	std::sort(v.begin(), v.end());
	return v;
}

Formulas concat(const Formulas &a, const Formulas &b)
{
	Formulas out = a;
	out.insert(out.end(), b.begin(), b.end());
	return out;
}

Formulas erase_at(Formulas v, std::size_t i)
{
	v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
	return v;
}

Formulas with_added(Formulas v, std::initializer_list<Formula> fs)
{
	for (const auto &f : fs)
		v.push_back(f);
	return sorted(std::move(v));
}

std::optional<std::size_t> find_first(const Formulas &v, bool (*pred)(const Formula &))
{
	for (std::size_t i = 0; i < v.size(); ++i)
		if (pred(v[i]))
			return i;
	return std::nullopt;
}

bool is_with(const Formula &f) { return f.is(Connective::With); }
bool is_pos(const Formula &f) { return f.is(Connective::Tensor) || f.is(Connective::Plus); }
bool is_par(const Formula &f) { return f.is(Connective::Par); }
bool is_top(const Formula &f) { return f.is(UnitKind::Top); }
bool is_bot(const Formula &f) { return f.is(UnitKind::Bot); }

/* All non-empty sub-multisets of `items` (sorted, with duplicates). */
std::vector<Formulas> nonempty_submultisets(const Formulas &items, bool singletons_only)
{
	std::vector<Formulas> out;
	if (singletons_only) {
		for (std::size_t i = 0; i < items.size(); ++i)
			if (i == 0 || items[i] != items[i - 1])
				out.push_back({items[i]});
		return out;
	}
	Formulas kinds;
	std::vector<int> mult;
	for (const auto &f : items) {
		if (!kinds.empty() && kinds.back() == f)
			++mult.back();
		else {
			kinds.push_back(f);
			mult.push_back(1);
		}
	}
	std::vector<int> take(kinds.size(), 0);
	auto rec = [&](auto &self, std::size_t i) -> void {
		if (i == kinds.size()) {
			Formulas pick;
			for (std::size_t j = 0; j < kinds.size(); ++j)
				for (int c = 0; c < take[j]; ++c)
					pick.push_back(kinds[j]);
			if (!pick.empty())
				out.push_back(std::move(pick));
			return;
		}
		for (int c = 0; c <= mult[i]; ++c) {
			take[i] = c;
			self(self, i + 1);
		}
	};
	rec(rec, 0);
	std::stable_sort(out.begin(), out.end(), [](const Formulas &a, const Formulas &b) { return a.size() < b.size(); });
	return out;
}

/* All splits of a sorted multiset into (left, right). */
std::vector<std::pair<Formulas, Formulas>> splits(const Formulas &items)
{
	Formulas kinds;
	std::vector<int> mult;
	for (const auto &f : items) {
		if (!kinds.empty() && kinds.back() == f)
			++mult.back();
		else {
			kinds.push_back(f);
			mult.push_back(1);
		}
	}
	std::vector<std::pair<Formulas, Formulas>> out;
	std::vector<int> take(kinds.size(), 0);
	auto rec = [&](auto &self, std::size_t i) -> void {
		if (i == kinds.size()) {
			Formulas l, r;
			for (std::size_t j = 0; j < kinds.size(); ++j) {
				for (int c = 0; c < take[j]; ++c)
					l.push_back(kinds[j]);
				for (int c = take[j]; c < mult[j]; ++c)
					r.push_back(kinds[j]);
			}
			out.emplace_back(std::move(l), std::move(r));
			return;
		}
		for (int c = 0; c <= mult[i]; ++c) {
			take[i] = c;
			self(self, i + 1);
		}
	};
	rec(rec, 0);
	return out;
}

enum class Decide { None, D, Dbot };

/* What a (sub)proof contributes to the complexity measures: the largest
 * number of D/D^ switches on a branch, and whether D or D^ occurs at all. */
struct Summary {
	std::size_t switches = 0;
	bool has_d = false;
	bool has_dbot = false;
	auto operator<=>(const Summary &) const = default;
};

Summary join(const Summary &a, const Summary &b)
{
	return {std::max(a.switches, b.switches), a.has_d || b.has_d, a.has_dbot || b.has_dbot};
}

std::size_t sigma_of(const Summary &s) { return s.has_dbot ? s.switches : 1; }
std::size_t pi_of(const Summary &s) { return s.has_d ? s.switches : 1; }

/* Proofs found for one state, one witness per distinct summary. In
 * first-found mode there is at most one entry. */
using Witnesses = std::map<Summary, ProofPtr>;

class FmallSearch {
public:
	FmallSearch(FocusMode mode, std::optional<std::size_t> budget, bool exhaustive)
	    : mode_(mode), budget_(budget), exhaustive_(exhaustive)
	{
	}

	/* `used` counts switches on the path from the root; it only matters
	 * when a budget is set. */
	Witnesses solve(const Formulas &plain, Phase phase, const Formulas &zone, Decide last, std::size_t used)
	{
		++nodes;
		if (!budget_)
			used = 0;
		auto key = std::make_tuple(plain, static_cast<int>(phase), zone, static_cast<int>(last), used);
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		Witnesses r = quick_refute(Sequent(concat(plain, zone))) ? Witnesses{} : body(plain, phase, zone, last, used);
		memo_.emplace(std::move(key), r);
		return r;
	}

	std::size_t nodes = 0;

private:
	static Sequent conclusion(const Formula &principal, const Formulas &rest)
	{
		Formulas fs{principal};
		fs.insert(fs.end(), rest.begin(), rest.end());
		return Sequent(std::move(fs));
	}

	static Witnesses leaf(ProofPtr p) { return {{Summary{}, std::move(p)}}; }

	/* Wraps every witness of a one-premise rule. */
	template <typename Make>
	static Witnesses lift(const Witnesses &in, Make make)
	{
		Witnesses out;
		for (const auto &[sum, proof] : in)
			out.emplace(sum, make(proof));
		return out;
	}

	/* Merges alternatives; reports whether the search may stop. */
	bool accept(Witnesses &acc, const Witnesses &more) const
	{
		for (const auto &[sum, proof] : more)
			acc.emplace(sum, proof);
		return !exhaustive_ && !acc.empty();
	}

	template <typename Make>
	Witnesses combine(const Witnesses &a, const Witnesses &b, Make make) const
	{
		Witnesses out;
		for (const auto &[sa, pa] : a)
			for (const auto &[sb, pb] : b) {
				out.emplace(join(sa, sb), make(pa, pb));
				if (!exhaustive_)
					return out;
			}
		return out;
	}

	Witnesses body(const Formulas &plain, Phase phase, const Formulas &zone, Decide last, std::size_t used)
	{
		switch (phase) {
		case Phase::None: return neutral(plain, last, used);
		case Phase::Down: return down(plain, zone, last, used);
		case Phase::Up: return up(plain, zone, last, used);
		}
		return {};
	}

	Witnesses decide(const Formulas &rest, Phase phase, const Formulas &picked, Decide last, Decide kind,
	                 std::size_t used)
	{
		bool switched = last != Decide::None && last != kind;
		std::size_t now = used + (switched ? 1 : 0);
		if (budget_ && now > *budget_)
			return {};
		Witnesses out;
		for (const auto &[sum, proof] : solve(rest, phase, picked, kind, now)) {
			Summary s = sum;
			s.switches += switched ? 1 : 0;
			(kind == Decide::D ? s.has_d : s.has_dbot) = true;
			out.emplace(s, proof);
		}
		return out;
	}

	Witnesses neutral(const Formulas &plain, Decide last, std::size_t used)
	{
		if (auto i = find_first(plain, is_top))
			return leaf(make_proof(conclusion(plain[*i], erase_at(plain, *i)), Rule::Top, 0));
		if (plain.size() == 2 && negate(plain[0]) == plain[1])
			return leaf(make_proof(Sequent{plain[0], plain[1]}, Rule::Id, std::nullopt));
		if (plain.size() == 1 && plain[0].is(UnitKind::One))
			return leaf(make_proof(Sequent{plain[0]}, Rule::One, std::nullopt));
		if (auto i = find_first(plain, is_bot)) {
			Formulas rest = erase_at(plain, *i);
			Sequent concl = conclusion(plain[*i], rest);
			return lift(solve(rest, Phase::None, {}, last, used),
			            [&](const ProofPtr &p) { return make_proof(concl, Rule::False, 0, {p}); });
		}
		if (auto i = find_first(plain, is_par)) {
			const Formula &f = plain[*i];
			Formulas rest = erase_at(plain, *i);
			Sequent concl = conclusion(f, rest);
			return lift(solve(with_added(rest, {f.left(), f.right()}), Phase::None, {}, last, used),
			            [&](const ProofPtr &p) { return make_proof(concl, Rule::Par, 0, {p}); });
		}

		Formulas ands, pos, other;
		for (const auto &f : plain)
			(is_with(f) ? ands : is_pos(f) ? pos : other).push_back(f);
		bool co = mode_ == FocusMode::Cofocussed || mode_ == FocusMode::Bifocussed;
		bool fo = mode_ == FocusMode::Focussed || mode_ == FocusMode::Bifocussed;
		Witnesses out;
		/* D only applies to cedents of atoms and positives, so a with in
		 * the cedent forces D^. */
		if (!ands.empty()) {
			for (const auto &m : nonempty_submultisets(ands, co)) {
				Formulas rest = sorted(concat(concat(other, pos), multiset_minus(ands, m)));
				if (accept(out, decide(rest, Phase::Up, m, last, Decide::Dbot, used)))
					return out;
			}
			return out;
		}
		for (const auto &p : nonempty_submultisets(pos, fo)) {
			Formulas rest = sorted(concat(other, multiset_minus(pos, p)));
			if (accept(out, decide(rest, Phase::Down, p, last, Decide::D, used)))
				return out;
		}
		return out;
	}

	static Formulas multiset_minus(const Formulas &a, const Formulas &b)
	{
		Formulas out;
		std::size_t j = 0;
		for (const auto &f : a) {
			if (j < b.size() && f == b[j]) {
				++j;
				continue;
			}
			out.push_back(f);
		}
		return out;
	}

	Witnesses down(const Formulas &plain, const Formulas &zone, Decide last, std::size_t used)
	{
		auto i = find_first(zone, is_pos);
		if (!i)
			return solve(sorted(concat(plain, zone)), Phase::None, {}, last, used);
		const Formula &f = zone[*i];
		Formulas rest = erase_at(zone, *i);
		Sequent concl = conclusion(f, concat(plain, rest));
		Witnesses out;
		if (f.is(Connective::Plus)) {
			for (int side = 0; side < 2; ++side) {
				Rule rule = side == 0 ? Rule::Plus1 : Rule::Plus2;
				auto r = solve(plain, Phase::Down, with_added(rest, {side == 0 ? f.left() : f.right()}), last, used);
				if (accept(out, lift(r, [&](const ProofPtr &p) { return make_proof(concl, rule, 0, {p}); })))
					return out;
			}
			return out;
		}
		for (const auto &[g1, g2] : splits(plain)) {
			for (const auto &[z1, z2] : splits(rest)) {
				auto a = solve(g1, Phase::Down, with_added(z1, {f.left()}), last, used);
				if (a.empty())
					continue;
				auto b = solve(g2, Phase::Down, with_added(z2, {f.right()}), last, used);
				auto both = combine(a, b, [&](const ProofPtr &pa, const ProofPtr &pb) {
					return make_proof(concl, Rule::Tensor, 0, {pa, pb});
				});
				if (accept(out, both))
					return out;
			}
		}
		return out;
	}

	Witnesses up(const Formulas &plain, const Formulas &zone, Decide last, std::size_t used)
	{
		auto i = find_first(zone, is_with);
		if (!i)
			return solve(sorted(concat(plain, zone)), Phase::None, {}, last, used);
		const Formula &f = zone[*i];
		Formulas rest = erase_at(zone, *i);
		auto a = solve(plain, Phase::Up, with_added(rest, {f.left()}), last, used);
		if (a.empty())
			return a;
		auto b = solve(plain, Phase::Up, with_added(rest, {f.right()}), last, used);
		Sequent concl = conclusion(f, concat(plain, rest));
		return combine(a, b, [&](const ProofPtr &pa, const ProofPtr &pb) {
			return make_proof(concl, Rule::With, 0, {pa, pb});
		});
	}

	FocusMode mode_;
	std::optional<std::size_t> budget_;
	bool exhaustive_;
	std::map<std::tuple<Formulas, int, Formulas, int, std::size_t>, Witnesses> memo_;
};

// ---- overapproximation ------------------------------------------------------

bool is_literal(const Formula &f) { return f.is_atom(); }

/* Literals, 1 and 0 play the role of atoms. */
bool atom_like(const Formula &f) { return f.is_atom() || f.is(UnitKind::One) || f.is(UnitKind::Zero); }

bool least_less(const Formula &a, const Formula &b)
{
	if (a.size() != b.size())
		return a.size() < b.size();
	return print(a) < print(b);
}

class Over {
public:
	std::size_t sigma(const Formulas &plain, const std::optional<Formula> &down)
	{
		auto key = std::make_tuple(0, plain, down);
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		std::size_t r = sigma_body(plain, down);
		memo_.emplace(std::move(key), r);
		return r;
	}

	std::size_t pi(const Formulas &plain, const std::optional<Formula> &up)
	{
		auto key = std::make_tuple(1, plain, up);
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		std::size_t r = pi_body(plain, up);
		memo_.emplace(std::move(key), r);
		return r;
	}

private:
	enum class Shape { Base, Par, Top, Positive, Negative };

	static Shape shape(const Formulas &plain, std::size_t &where)
	{
		for (std::size_t i = 0; i < plain.size(); ++i)
			if (plain[i].is(UnitKind::Top)) {
				where = i;
				return Shape::Top;
			}
		for (std::size_t i = 0; i < plain.size(); ++i)
			if (plain[i].is(Connective::Par)) {
				where = i;
				return Shape::Par;
			}
		bool with = false, pos = false;
		for (const auto &f : plain) {
			if (atom_like(f) || is_c_formula(f))
				continue;
			if (f.is(Connective::With))
				with = true;
			else
				pos = true;
		}
		if (with)
			return Shape::Negative;
		return pos ? Shape::Positive : Shape::Base;
	}

	/* Index of the least formula satisfying pred. */
	template <typename Pred>
	static std::size_t least(const Formulas &plain, Pred pred)
	{
		std::optional<std::size_t> best;
		for (std::size_t i = 0; i < plain.size(); ++i)
			if (pred(plain[i]) && (!best || least_less(plain[i], plain[*best])))
				best = i;
		return *best;
	}

	static Formulas add(Formulas v, const Formula &f)
	{
		v.insert(std::upper_bound(v.begin(), v.end(), f), f);
		return v;
	}

	std::size_t sigma_body(const Formulas &plain, const std::optional<Formula> &down)
	{
		if (down) {
			const Formula &x = *down;
			if (x.is(Connective::Plus) || x.is(Connective::Tensor)) {
				bool left = sigma({x.left()}, std::nullopt) >= sigma({x.right()}, std::nullopt);
				return sigma(add(plain, left ? x.left() : x.right()), std::nullopt);
			}
			return sigma(add(plain, x), std::nullopt);
		}
		std::size_t i = 0;
		switch (shape(plain, i)) {
		case Shape::Top:
		case Shape::Base:
			return 1;
		case Shape::Par:
			return sigma(add(add(erase_at(plain, i), plain[i].left()), plain[i].right()), std::nullopt);
		case Shape::Positive: {
			std::size_t p = least(plain, [](const Formula &f) { return is_pos(f) && !is_c_formula(f); });
			return sigma(erase_at(plain, p), plain[p]);
		}
		case Shape::Negative:
			return 1 + pi(plain, std::nullopt);
		}
		return 1;
	}

	std::size_t pi_body(const Formulas &plain, const std::optional<Formula> &up)
	{
		if (up) {
			const Formula &x = *up;
			if (x.is(Connective::With)) {
				bool left = pi({x.left()}, std::nullopt) >= pi({x.right()}, std::nullopt);
				return pi(add(plain, left ? x.left() : x.right()), std::nullopt);
			}
			return pi(add(plain, x), std::nullopt);
		}
		std::size_t i = 0;
		switch (shape(plain, i)) {
		case Shape::Top:
		case Shape::Base:
			return 1;
		case Shape::Par:
			return pi(add(add(erase_at(plain, i), plain[i].left()), plain[i].right()), std::nullopt);
		case Shape::Negative: {
			std::size_t m = least(plain, is_with);
			return pi(erase_at(plain, m), plain[m]);
		}
		case Shape::Positive:
			return 1 + sigma(plain, std::nullopt);
		}
		return 1;
	}

	std::map<std::tuple<int, Formulas, std::optional<Formula>>, std::size_t> memo_;
};

} // namespace

bool is_c_formula(const Formula &f)
{
	if (f.is(UnitKind::Bot))
		return true;
	if (!f.is(Connective::Plus))
		return false;
	bool lc = is_c_formula(f.left()), rc = is_c_formula(f.right());
	return (lc && (rc || is_literal(f.right()))) || (rc && is_literal(f.left()));
}

FmallResult fmall_prove(const Sequent &s, const FmallOptions &opts)
{
	require_mall(s.formulas());
	FmallSearch search(opts.mode, opts.alternation_budget, false);
	auto r = search.solve(s.sorted(), Phase::None, {}, Decide::None, 0);
	FmallResult out;
	out.search.stats.nodes_expanded = search.nodes;
	if (r.empty()) {
		out.search.verdict = Verdict::NotProvable;
		return out;
	}
	const auto &[sum, proof] = *r.begin();
	out.search.verdict = Verdict::Provable;
	out.search.proof = proof;
	out.search.stats.max_depth = proof_height(*proof);
	out.alternations = sum.switches;
	out.sigma = sigma_of(sum);
	out.pi = pi_of(sum);
	return out;
}

namespace {

template <typename Measure>
std::optional<std::size_t> min_measure(const Sequent &s, FocusMode mode, Measure measure)
{
	require_mall(s.formulas());
	FmallSearch search(mode, std::nullopt, true);
	std::optional<std::size_t> best;
	for (const auto &[sum, proof] : search.solve(s.sorted(), Phase::None, {}, Decide::None, 0)) {
		std::size_t v = measure(sum);
		if (!best || v < *best)
			best = v;
	}
	return best;
}

} // namespace

std::optional<std::size_t> fmall_min_sigma(const Sequent &s, FocusMode mode) { return min_measure(s, mode, sigma_of); }

std::optional<std::size_t> fmall_min_pi(const Sequent &s, FocusMode mode) { return min_measure(s, mode, pi_of); }

std::size_t fmall_sigma(const FocusSequent &s)
{
	require_mall(s.plain);
	require_mall(s.zone);
	Over o;
	Formulas plain = sorted(s.plain);
	if (s.phase == Phase::None || s.zone.empty())
		return o.sigma(sorted(concat(plain, s.zone)), std::nullopt);
	if (s.phase == Phase::Down && s.zone.size() == 1)
		return o.sigma(plain, s.zone[0]);
	throw std::invalid_argument("the sigma overapproximation is defined for a single down-focused formula");
}

std::size_t fmall_pi(const FocusSequent &s)
{
	require_mall(s.plain);
	require_mall(s.zone);
	Over o;
	Formulas plain = sorted(s.plain);
	if (s.phase == Phase::None || s.zone.empty())
		return o.pi(sorted(concat(plain, s.zone)), std::nullopt);
	if (s.phase == Phase::Up && s.zone.size() == 1)
		return o.pi(plain, s.zone[0]);
	throw std::invalid_argument("the pi overapproximation is defined for a single up-focused formula");
}

std::size_t fmall_sigma(const Sequent &s) { return fmall_sigma(FocusSequent{s.formulas(), {}, Phase::None}); }
std::size_t fmall_pi(const Sequent &s) { return fmall_pi(FocusSequent{s.formulas(), {}, Phase::None}); }

} // namespace llwb
