/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/calculus/prove.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

#include "llwb/core/fragment.hpp"

namespace llwb {

std::string_view to_string(Verdict v)
{
	switch (v) {
	case Verdict::Provable: return "provable";
	case Verdict::NotProvable: return "not_provable";
	case Verdict::Unknown: return "unknown_depth_exhausted";
	}
	return "?";
}

std::size_t default_depth(const Sequent &s) { return 2 * s.total_size() + 4; }

namespace {

/* The search is focused (Andreoli style) over triadic states
 *   Theta ; Delta  [; focus]
 * where Theta is the set of bodies C of stored ?C formulas. Every step is
 * mirrored by ordinary dyadic rules: Theta is re-materialized as ?C
 * formulas, duplicated by contraction before tensor splits and before
 * derelictions, and discarded by weakening at id/one leaves.
 *
 * Positive atoms are synchronous, negated atoms asynchronous. */

using Formulas = std::vector<Formula>;

bool is_async(const Formula &f)
{
	return f.is(Connective::Par) || f.is(Connective::With) || f.is(UnitKind::Bot) || f.is(UnitKind::Top) ||
	       f.is(Modality::WhyNot);
}

bool is_negative(const Formula &f) { return is_async(f) || (f.is_atom() && f.negated()); }

Formulas insert_sorted(Formulas v, const Formula &f)
{
	v.insert(std::upper_bound(v.begin(), v.end(), f), f);
	return v;
}

Formulas erase_at(Formulas v, std::size_t i)
{
	v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
	return v;
}

struct Key {
	Formulas theta, delta;
	std::optional<Formula> focus;
	std::size_t hash;

	Key(Formulas t, Formulas d, std::optional<Formula> f) : theta(std::move(t)), delta(std::move(d)), focus(std::move(f))
	{
		std::size_t h = focus ? focus->hash() : 0x51;
		for (const auto &x : theta)
			h = h * 1000003 ^ x.hash();
		h = h * 31 + 7;
		for (const auto &x : delta)
			h = h * 1000003 ^ x.hash();
		hash = h;
	}

	bool operator==(const Key &o) const
	{
		return hash == o.hash && focus == o.focus && theta == o.theta && delta == o.delta;
	}
};

struct KeyHash {
	std::size_t operator()(const Key &k) const { return k.hash; }
};

enum class Outcome { Proved, Failed, Cutoff };

struct Entry {
	Outcome outcome;
	ProofPtr proof;
	std::size_t depth; // steps used (Proved) or remaining budget at failure (Cutoff)
};

struct Res {
	ProofPtr proof;
	std::size_t used = 0;
	bool cutoff = false;
};

Res fail(bool cutoff) { return Res{nullptr, 0, cutoff}; }

struct Info {
	bool has_top = false;
	bool has_modal = false;
	std::vector<int> lo, hi;   // per atom: range of (#p - #p^) over additive slices
	std::vector<int> literals; // sorted literal ids occurring as subformulas
};

class Search {
public:
	Search(const Sequent &root, const ProveOptions &opts) : opts_(opts)
	{
		for (const auto &f : root)
			collect_atoms(f);
	}

	Res unfocused(const Formulas &theta, const Formulas &delta, std::size_t rem)
	{
		return memoized(Key(theta, delta, std::nullopt), rem, [&] { return unfocused_body(theta, delta, rem); });
	}

	SearchStats stats;
	bool aborted = false;
	std::size_t limit = 0;

private:
	template <typename F>
	Res memoized(Key key, std::size_t rem, F body)
	{
		++stats.nodes_expanded;
		stats.max_depth = std::max(stats.max_depth, limit - rem);
		if (opts_.node_limit && stats.nodes_expanded > opts_.node_limit)
			aborted = true;
		if (aborted)
			return fail(true);
		if (auto it = memo_.find(key); it != memo_.end()) {
			const Entry &e = it->second;
			if (e.outcome == Outcome::Failed)
				return fail(false);
			if (e.outcome == Outcome::Proved && e.depth <= rem)
				return Res{e.proof, e.depth, false};
			if (e.outcome == Outcome::Cutoff && rem <= e.depth)
				return fail(true);
		}
		Res r = body();
		if (aborted)
			return r;
		if (r.proof)
			memo_.insert_or_assign(std::move(key), Entry{Outcome::Proved, r.proof, r.used});
		else
			memo_.insert_or_assign(std::move(key), Entry{r.cutoff ? Outcome::Cutoff : Outcome::Failed, nullptr, rem});
		return r;
	}

	Res focused(const Formulas &theta, const Formulas &delta, const Formula &focus, std::size_t rem)
	{
		return memoized(Key(theta, delta, focus), rem, [&] { return focused_body(theta, delta, focus, rem); });
	}

	// ---- dyadic reconstruction -------------------------------------------------

	static Sequent conclusion(const Formulas &front, const Formulas &theta, const Formulas &delta)
	{
		Formulas out = front;
		for (const auto &c : theta)
			out.push_back(whynot(c));
		out.insert(out.end(), delta.begin(), delta.end());
		return Sequent(std::move(out));
	}

	static ProofPtr weaken_all(const Formulas &theta, ProofPtr p)
	{
		for (auto it = theta.rbegin(); it != theta.rend(); ++it) {
			Formulas fs{whynot(*it)};
			fs.insert(fs.end(), p->conclusion.begin(), p->conclusion.end());
			p = make_proof(Sequent(std::move(fs)), Rule::Weakening, 0, {p});
		}
		return p;
	}

	/* p concludes a sequent holding every ?C of theta twice. */
	static ProofPtr contract_all(const Formulas &theta, ProofPtr p)
	{
		for (const auto &c : theta) {
			Formula q = whynot(c);
			const auto &fs = p->conclusion.formulas();
			auto first = std::find(fs.begin(), fs.end(), q);
			Sequent s = p->conclusion.without(static_cast<std::size_t>(first - fs.begin()));
			const auto &gs = s.formulas();
			auto idx = static_cast<std::size_t>(std::find(gs.begin(), gs.end(), q) - gs.begin());
			p = make_proof(std::move(s), Rule::Contraction, idx, {p});
		}
		return p;
	}

	// ---- pruning ----------------------------------------------------------------

	void collect_atoms(const Formula &f)
	{
		if (f.is_atom())
			atoms_.emplace(f.name(), static_cast<int>(atoms_.size()));
		else if (f.is_binary()) {
			collect_atoms(f.left());
			collect_atoms(f.right());
		} else if (f.is_modal())
			collect_atoms(f.body());
	}

	int literal_id(const Formula &f) const { return 2 * atoms_.at(f.name()) + (f.negated() ? 1 : 0); }

	const Info &info(const Formula &f)
	{
		if (auto it = info_.find(f); it != info_.end())
			return it->second;
		Info in;
		std::size_t n = atoms_.size();
		in.lo.assign(n, 0);
		in.hi.assign(n, 0);
		switch (f.kind()) {
		case Formula::Kind::Atom: {
			int a = atoms_.at(f.name());
			in.lo[a] = in.hi[a] = f.negated() ? -1 : 1;
			in.literals = {literal_id(f)};
			break;
		}
		case Formula::Kind::Unit:
			in.has_top = f.is(UnitKind::Top);
			break;
		case Formula::Kind::Binary: {
			Info l = info(f.left());
			const Info &r = info(f.right());
			bool additive = f.is(Connective::Plus) || f.is(Connective::With);
			for (std::size_t i = 0; i < n; ++i) {
				in.lo[i] = additive ? std::min(l.lo[i], r.lo[i]) : l.lo[i] + r.lo[i];
				in.hi[i] = additive ? std::max(l.hi[i], r.hi[i]) : l.hi[i] + r.hi[i];
			}
			in.has_top = l.has_top || r.has_top;
			in.has_modal = l.has_modal || r.has_modal;
			std::set_union(l.literals.begin(), l.literals.end(), r.literals.begin(), r.literals.end(),
			               std::back_inserter(in.literals));
			break;
		}
		case Formula::Kind::Modal: {
			const Info &b = info(f.body());
			in.has_top = b.has_top;
			in.has_modal = true;
			in.literals = b.literals;
			break;
		}
		}
		return info_.emplace(f, std::move(in)).first->second;
	}

public:
	/* Sound necessary conditions for provability of Theta ; Delta. */
	bool hopeless(const Formulas &theta, const Formulas &delta)
	{
		bool top = false, modal = !theta.empty();
		std::vector<char> present(2 * atoms_.size(), 0);
		auto scan = [&](const Formula &f) {
			const Info &in = info(f);
			top = top || in.has_top;
			modal = modal || in.has_modal;
			for (int l : in.literals)
				present[static_cast<std::size_t>(l)] = 1;
		};
		for (const auto &f : theta)
			scan(f);
		for (const auto &f : delta)
			scan(f);
		if (top)
			return false;
		for (const auto &f : delta) {
			if (f.is(UnitKind::Zero))
				return true;
			if (f.is_atom() && !present[static_cast<std::size_t>(literal_id(f) ^ 1)])
				return true;
		}
		if (modal)
			return false;
		for (std::size_t a = 0; a < atoms_.size(); ++a) {
			int lo = 0, hi = 0;
			for (const auto &f : delta) {
				lo += info(f).lo[a];
				hi += info(f).hi[a];
			}
			if (lo > 0 || hi < 0)
				return true;
		}
		return false;
	}

private:
	// ---- unfocused phase --------------------------------------------------------

	Res unfocused_body(const Formulas &theta, const Formulas &delta, std::size_t rem)
	{
		if (delta.size() == 2 && negate(delta[0]) == delta[1] && (!opts_.atomic_axioms || delta[0].is_atom())) {
			if (rem == 0)
				return fail(true);
			return Res{weaken_all(theta, make_proof(Sequent{delta[0], delta[1]}, Rule::Id, std::nullopt)), 1, false};
		}
		if (hopeless(theta, delta))
			return fail(false);

		for (std::size_t i = 0; i < delta.size(); ++i) {
			const Formula &f = delta[i];
			if (!is_async(f))
				continue;
			Formulas rest = erase_at(delta, i);
			if (f.is(Modality::WhyNot) && !std::binary_search(theta.begin(), theta.end(), f.body()))
				return unfocused(insert_sorted(theta, f.body()), rest, rem);
			if (rem == 0)
				return fail(true);
			Sequent concl = conclusion({f}, theta, rest);
			if (f.is(UnitKind::Top))
				return Res{make_proof(std::move(concl), Rule::Top, 0), 1, false};
			if (f.is(Connective::With)) {
				Res a = unfocused(theta, insert_sorted(rest, f.left()), rem - 1);
				if (!a.proof)
					return a;
				Res b = unfocused(theta, insert_sorted(rest, f.right()), rem - 1);
				if (!b.proof)
					return b;
				return Res{make_proof(std::move(concl), Rule::With, 0, {a.proof, b.proof}),
				           std::max(a.used, b.used) + 1, false};
			}
			Formulas next;
			Rule rule;
			if (f.is(Connective::Par)) {
				next = insert_sorted(insert_sorted(rest, f.left()), f.right());
				rule = Rule::Par;
			} else if (f.is(UnitKind::Bot)) {
				next = rest;
				rule = Rule::False;
			} else {
				next = rest; // a second copy of an already stored ?C
				rule = Rule::Weakening;
			}
			Res a = unfocused(theta, next, rem - 1);
			if (!a.proof)
				return a;
			return Res{make_proof(std::move(concl), rule, 0, {a.proof}), a.used + 1, false};
		}

		bool cutoff = false;
		for (std::size_t i = 0; i < delta.size(); ++i) {
			if (i > 0 && delta[i] == delta[i - 1])
				continue;
			if (is_negative(delta[i]))
				continue;
			Res r = focused(theta, erase_at(delta, i), delta[i], rem);
			if (r.proof)
				return r;
			cutoff = cutoff || r.cutoff;
		}
		for (const auto &c : theta) {
			if (rem == 0) {
				cutoff = true;
				break;
			}
			Res r = focused(theta, delta, c, rem - 1);
			if (r.proof) {
				Sequent d = conclusion({whynot(c)}, theta, delta);
				auto der = make_proof(std::move(d), Rule::Dereliction, 0, {r.proof});
				Sequent base = conclusion({}, theta, delta);
				auto idx = static_cast<std::size_t>(std::find(theta.begin(), theta.end(), c) - theta.begin());
				return Res{make_proof(std::move(base), Rule::Contraction, idx, {der}), r.used + 1, false};
			}
			cutoff = cutoff || r.cutoff;
		}
		return fail(cutoff);
	}

	// ---- focused phase ----------------------------------------------------------

	Res focused_body(const Formulas &theta, const Formulas &delta, const Formula &f, std::size_t rem)
	{
		if (is_negative(f))
			return unfocused(theta, insert_sorted(delta, f), rem);
		if (f.is(UnitKind::Zero))
			return fail(false);
		if (rem == 0)
			return fail(true);
		switch (f.kind()) {
		case Formula::Kind::Atom:
			if (delta.size() == 1 && delta[0] == negate(f))
				return Res{weaken_all(theta, make_proof(Sequent{f, delta[0]}, Rule::Id, std::nullopt)), 1, false};
			return fail(false);
		case Formula::Kind::Unit: // only 1 is left here
			if (delta.empty())
				return Res{weaken_all(theta, make_proof(Sequent{f}, Rule::One, std::nullopt)), 1, false};
			return fail(false);
		case Formula::Kind::Modal: {
			if (!delta.empty())
				return fail(false);
			Res a = unfocused(theta, {f.body()}, rem - 1);
			if (!a.proof)
				return a;
			return Res{make_proof(conclusion({f}, theta, {}), Rule::OfCourse, 0, {a.proof}), a.used + 1, false};
		}
		case Formula::Kind::Binary:
			break;
		}
		if (f.is(Connective::Plus)) {
			bool cutoff = false;
			for (int side = 0; side < 2; ++side) {
				Res a = focused(theta, delta, side == 0 ? f.left() : f.right(), rem - 1);
				if (a.proof)
					return Res{make_proof(conclusion({f}, theta, delta), side == 0 ? Rule::Plus1 : Rule::Plus2, 0,
					                      {a.proof}),
					           a.used + 1, false};
				cutoff = cutoff || a.cutoff;
			}
			return fail(cutoff);
		}
		return tensor(theta, delta, f, rem);
	}

	/* Required exact context for a focused sub-formula, if it is forced. */
	std::optional<Formulas> forced_context(const Formula &g) const
	{
		if (g.is_atom() && !g.negated())
			return Formulas{negate(g)};
		if (g.is(UnitKind::One) || g.is(Modality::OfCourse))
			return Formulas{};
		return std::nullopt;
	}

	static std::optional<Formulas> multiset_minus(const Formulas &a, const Formulas &b)
	{
		Formulas out;
		std::size_t j = 0;
		for (std::size_t i = 0; i < a.size(); ++i) {
			if (j < b.size() && a[i] == b[j]) {
				++j;
				continue;
			}
			out.push_back(a[i]);
		}
		if (j != b.size())
			return std::nullopt;
		return out;
	}

	std::vector<std::pair<Formulas, Formulas>> splits(const Formulas &theta, const Formulas &delta, const Formula &f)
	{
		std::vector<std::pair<Formulas, Formulas>> out;
		const Formula &a = f.left();
		const Formula &b = f.right();
		if (a.is(UnitKind::Zero) || b.is(UnitKind::Zero))
			return out;
		auto fa = forced_context(a), fb = forced_context(b);
		if (fa || fb) {
			const Formulas &forced = fa ? *fa : *fb;
			auto other = multiset_minus(delta, forced);
			if (!other)
				return out;
			Formulas l = fa ? forced : *other;
			Formulas r = fa ? *other : forced;
			if (fa && fb && r != *fb)
				return out;
			out.emplace_back(std::move(l), std::move(r));
			return out;
		}

		std::vector<Formula> kinds;
		std::vector<int> mult;
		for (const auto &g : delta) {
			if (!kinds.empty() && kinds.back() == g)
				++mult.back();
			else {
				kinds.push_back(g);
				mult.push_back(1);
			}
		}

		bool balance = theta.empty() && !info(a).has_top && !info(a).has_modal && !info(b).has_top &&
		               !info(b).has_modal;
		for (const auto &g : kinds)
			balance = balance && !info(g).has_top && !info(g).has_modal;

		std::size_t n = atoms_.size(), k = kinds.size();
		// Suffix sums of the slack each remaining kind could add to either side.
		std::vector<std::vector<int>> slack_lo(k + 1, std::vector<int>(n, 0)), slack_hi = slack_lo;
		if (balance) {
			for (std::size_t i = k; i-- > 0;) {
				const Info &in = info(kinds[i]);
				for (std::size_t x = 0; x < n; ++x) {
					slack_lo[i][x] = slack_lo[i + 1][x] + mult[i] * std::min(0, in.lo[x]);
					slack_hi[i][x] = slack_hi[i + 1][x] + mult[i] * std::max(0, in.hi[x]);
				}
			}
		}

		std::vector<int> lo_l = info(a).lo, hi_l = info(a).hi, lo_r = info(b).lo, hi_r = info(b).hi;
		std::vector<int> take(k, 0);
		auto feasible = [&](std::size_t i) {
			for (std::size_t x = 0; x < n; ++x) {
				if (lo_l[x] + slack_lo[i][x] > 0 || hi_l[x] + slack_hi[i][x] < 0)
					return false;
				if (lo_r[x] + slack_lo[i][x] > 0 || hi_r[x] + slack_hi[i][x] < 0)
					return false;
			}
			return true;
		};
		auto shift = [&](std::size_t i, int left, int sign) {
			const Info &in = info(kinds[i]);
			int right = mult[i] - left;
			for (std::size_t x = 0; x < n; ++x) {
				lo_l[x] += sign * left * in.lo[x];
				hi_l[x] += sign * left * in.hi[x];
				lo_r[x] += sign * right * in.lo[x];
				hi_r[x] += sign * right * in.hi[x];
			}
		};
		auto rec = [&](auto &self, std::size_t i) -> void {
			if (balance && !feasible(i))
				return;
			if (i == k) {
				Formulas l, r;
				for (std::size_t j = 0; j < k; ++j) {
					for (int c = 0; c < take[j]; ++c)
						l.push_back(kinds[j]);
					for (int c = take[j]; c < mult[j]; ++c)
						r.push_back(kinds[j]);
				}
				out.emplace_back(std::move(l), std::move(r));
				return;
			}
			for (int left = 0; left <= mult[i]; ++left) {
				take[i] = left;
				if (balance)
					shift(i, left, +1);
				self(self, i + 1);
				if (balance)
					shift(i, left, -1);
			}
		};
		rec(rec, 0);
		std::stable_sort(out.begin(), out.end(),
		                 [](const auto &x, const auto &y) { return x.first.size() < y.first.size(); });
		return out;
	}

	Res tensor(const Formulas &theta, const Formulas &delta, const Formula &f, std::size_t rem)
	{
		bool cutoff = false;
		for (auto &[l, r] : splits(theta, delta, f)) {
			Res a = focused(theta, l, f.left(), rem - 1);
			if (!a.proof) {
				cutoff = cutoff || a.cutoff;
				continue;
			}
			Res b = focused(theta, r, f.right(), rem - 1);
			if (!b.proof) {
				cutoff = cutoff || b.cutoff;
				continue;
			}
			Formulas doubled = theta;
			doubled.insert(doubled.end(), theta.begin(), theta.end());
			Formulas both = l;
			both.insert(both.end(), r.begin(), r.end());
			auto t = make_proof(conclusion({f}, doubled, both), Rule::Tensor, 0, {a.proof, b.proof});
			return Res{contract_all(theta, t), std::max(a.used, b.used) + 1, false};
		}
		return fail(cutoff);
	}

	ProveOptions opts_;
	std::map<std::string, int> atoms_;
	std::unordered_map<Formula, Info> info_;
	std::unordered_map<Key, Entry, KeyHash> memo_;
};

} // namespace

bool quick_refute(const Sequent &s)
{
	Search search(s, {});
	return search.hopeless({}, s.formulas());
}

SearchResult prove(const Sequent &s, const ProveOptions &opts)
{
	std::size_t limit = opts.depth_limit ? opts.depth_limit : default_depth(s);
	Search search(s, opts);
	Formulas root = s.sorted();

	std::vector<std::size_t> schedule;
	if (!leq(classify_fragment(s), Fragment::MALL)) {
		for (std::size_t d = 8; d < limit; d *= 2)
			schedule.push_back(d);
	}
	schedule.push_back(limit);

	SearchResult out;
	for (std::size_t d : schedule) {
		search.limit = d;
		Res r = search.unfocused({}, root, d);
		out.stats = search.stats;
		if (r.proof) {
			out.verdict = Verdict::Provable;
			out.proof = r.proof;
			return out;
		}
		if (!r.cutoff) {
			out.verdict = Verdict::NotProvable;
			return out;
		}
		if (search.aborted)
			break;
	}
	out.verdict = Verdict::Unknown;
	return out;
}

} // namespace llwb
