/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/horn/horn.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace llwb {

// ---- simple conjunctions -----------------------------------------------------

SimpleConjunction::SimpleConjunction(std::initializer_list<std::pair<const std::string, unsigned>> init)
{
	for (const auto &[a, n] : init)
		add(a, n);
}

SimpleConjunction SimpleConjunction::atom(const std::string &name, unsigned count)
{
	SimpleConjunction c;
	c.add(name, count);
	return c;
}

unsigned SimpleConjunction::count(const std::string &atom) const
{
	auto it = counts_.find(atom);
	return it == counts_.end() ? 0 : it->second;
}

void SimpleConjunction::add(const std::string &atom, unsigned n)
{
	if (n)
		counts_[atom] += n;
}

std::size_t SimpleConjunction::size() const
{
	std::size_t n = 0;
	for (const auto &[a, k] : counts_)
		n += k;
	return n;
}

bool SimpleConjunction::subset_of(const SimpleConjunction &other) const
{
	for (const auto &[a, k] : counts_)
		if (other.count(a) < k)
			return false;
	return true;
}

SimpleConjunction operator+(const SimpleConjunction &a, const SimpleConjunction &b)
{
	SimpleConjunction out = a;
	for (const auto &[x, k] : b.counts_)
		out.add(x, k);
	return out;
}

SimpleConjunction operator-(const SimpleConjunction &a, const SimpleConjunction &b)
{
	if (!b.subset_of(a))
		throw std::invalid_argument("multiset difference of non-contained conjunctions");
	SimpleConjunction out = a;
	for (const auto &[x, k] : b.counts_) {
		auto it = out.counts_.find(x);
		it->second -= k;
		if (it->second == 0)
			out.counts_.erase(it);
	}
	return out;
}

Formula to_formula(const SimpleConjunction &c)
{
	std::optional<Formula> out;
	for (const auto &[a, k] : c.counts())
		for (unsigned i = 0; i < k; ++i)
			out = out ? tensor(*out, Formula::atom(a)) : Formula::atom(a);
	return out ? *out : Formula::one();
}

std::string print(const SimpleConjunction &c)
{
	if (c.empty())
		return "1";
	std::string out;
	for (const auto &[a, k] : c.counts()) {
		if (!out.empty())
			out += " * ";
		out += a;
		if (k > 1)
			out += "^" + std::to_string(k);
	}
	return out;
}

std::string print(const Implication &i) { return print(i.from) + " -o " + print(i.to); }

// ---- clauses ---------------------------------------------------------------

HornClause HornClause::plain(SimpleConjunction x, SimpleConjunction y, bool banged)
{
	return HornClause{Kind::Plain, Implication{std::move(x), std::move(y)}, {}, banged};
}

HornClause HornClause::plus(SimpleConjunction x, SimpleConjunction y1, SimpleConjunction y2, bool banged)
{
	return HornClause{Kind::Plus, Implication{x, std::move(y1)}, Implication{x, std::move(y2)}, banged};
}

HornClause HornClause::with(Implication a, Implication b, bool banged)
{
	return HornClause{Kind::With, std::move(a), std::move(b), banged};
}

std::vector<Implication> HornClause::components() const
{
	if (kind == Kind::Plain)
		return {first};
	return {first, second};
}

Formula to_formula(const HornClause &c)
{
	auto imp = [](const Implication &i) {
		return desugar_implication(ImplicationKind::Multiplicative, to_formula(i.from), to_formula(i.to));
	};
	Formula f = imp(c.first);
	if (c.kind == HornClause::Kind::Plus)
		f = desugar_implication(ImplicationKind::Multiplicative, to_formula(c.first.from),
		                        plus(to_formula(c.first.to), to_formula(c.second.to)));
	else if (c.kind == HornClause::Kind::With)
		f = with(imp(c.first), imp(c.second));
	return c.banged ? ofcourse(f) : f;
}

std::string print(const HornClause &c)
{
	std::string body;
	switch (c.kind) {
	case HornClause::Kind::Plain: body = print(c.first); break;
	case HornClause::Kind::Plus: body = print(c.first) + " + " + print(c.second.to); break;
	case HornClause::Kind::With: body = print(c.first) + " & " + print(c.second); break;
	}
	return (c.banged ? "![" : "[") + body + "]";
}

TwoSidedSequent to_two_sided(const HornSequent &hs)
{
	TwoSidedSequent out;
	for (const auto &[a, k] : hs.w.counts())
		for (unsigned i = 0; i < k; ++i)
			out.antecedent.push_back(Formula::atom(a));
	for (const auto &c : hs.gamma)
		out.antecedent.push_back(to_formula(c));
	for (auto c : hs.delta) {
		c.banged = true;
		out.antecedent.push_back(to_formula(c));
	}
	out.succedent.push_back(to_formula(hs.z));
	return out;
}

// ---- programs --------------------------------------------------------------

std::size_t vertex_count(const HornProgram &p)
{
	std::function<std::size_t(const ProgramNode &)> count = [&](const ProgramNode &n) {
		std::size_t k = 1;
		for (const auto &e : n.edges)
			k += count(*e.child);
		return k;
	};
	return count(*p.root);
}

ExecResult exec_program(const HornProgram &p, const SimpleConjunction &w)
{
	ExecResult out;
	std::size_t next_id = 0;
	std::function<void(const ProgramNode &, const SimpleConjunction &)> walk = [&](const ProgramNode &n,
	                                                                               const SimpleConjunction &val) {
		++next_id;
		if (n.edges.empty()) {
			out.leaves.push_back(val);
			return;
		}
		for (const auto &e : n.edges) {
			if (!out.defined)
				return;
			if (!e.label.from.subset_of(val)) {
				out.defined = false;
				out.undefined_vertex = next_id;
				return;
			}
			walk(*e.child, e.label.to + (val - e.label.from));
		}
	};
	walk(*p.root, w);
	if (!out.defined)
		out.leaves.clear();
	return out;
}

namespace {

/* All ways the clauses of `hs` can account for a vertex with the given
 * outgoing edges. */
std::vector<ClauseRef> candidate_sources(const HornSequent &hs, const ProgramEdge &e)
{
	std::vector<ClauseRef> out;
	auto scan = [&](const std::vector<HornClause> &cls, bool banged) {
		for (std::size_t i = 0; i < cls.size(); ++i) {
			auto comps = cls[i].components();
			for (std::size_t k = 0; k < comps.size(); ++k)
				if (comps[k] == e.label)
					out.push_back(ClauseRef{banged, i, k});
		}
	};
	scan(hs.gamma, false);
	scan(hs.delta, true);
	return out;
}

const HornClause &clause_at(const HornSequent &hs, const ClauseRef &r)
{
	const auto &v = r.banged ? hs.delta : hs.gamma;
	if (r.index >= v.size())
		throw std::out_of_range("clause reference out of range");
	return v[r.index];
}

class Validator {
public:
	Validator(const HornSequent &hs, HornMode mode) : hs_(hs), mode_(mode) {}

	/* Empty on success. `used` holds the gamma clauses consumed on the path
	 * from the root. */
	std::string check(const ProgramNode &n, const SimpleConjunction &val, std::vector<bool> &used)
	{
		if (n.edges.empty())
			return check_leaf(val, used);
		if (n.edges.size() > 2)
			return "vertex with more than two children";

		/* Candidate explanations of this vertex: a (clause, components...)
		 * choice per edge. */
		std::vector<std::vector<ClauseRef>> choices;
		if (n.edges.size() == 1) {
			for (auto r : restrict(n.edges[0], candidate_sources(hs_, n.edges[0])))
				if (clause_at(hs_, r).kind != HornClause::Kind::Plus)
					choices.push_back({r});
		} else {
			for (auto r0 : restrict(n.edges[0], candidate_sources(hs_, n.edges[0])))
				for (auto r1 : restrict(n.edges[1], candidate_sources(hs_, n.edges[1])))
					if (r0.banged == r1.banged && r0.index == r1.index && r0.component != r1.component &&
					    clause_at(hs_, r0).kind == HornClause::Kind::Plus)
						choices.push_back({r0, r1});
		}
		if (choices.empty())
			return "edge '" + print(n.edges[0].label) + (n.edges.size() == 2 ? "' / '" + print(n.edges[1].label) : "") +
			       "' does not stem from a clause of the sequent";

		std::string last_error;
		for (const auto &choice : choices) {
			const ClauseRef &r = choice[0];
			if (!r.banged && used[r.index]) {
				last_error = "clause " + print(clause_at(hs_, r)) + " used twice on one branch";
				continue;
			}
			if (!r.banged)
				used[r.index] = true;
			std::string err;
			for (const auto &e : n.edges) {
				if (!e.label.from.subset_of(val)) {
					err = "edge '" + print(e.label) + "' not applicable to " + print(val);
					break;
				}
				err = check(*e.child, e.label.to + (val - e.label.from), used);
				if (!err.empty())
					break;
			}
			if (!r.banged)
				used[r.index] = false;
			if (err.empty())
				return err;
			last_error = err;
		}
		return last_error;
	}

private:
	static std::vector<ClauseRef> restrict(const ProgramEdge &e, std::vector<ClauseRef> cands)
	{
		if (!e.source)
			return cands;
		std::vector<ClauseRef> out;
		for (const auto &c : cands)
			if (c == *e.source)
				out.push_back(c);
		return out;
	}

	std::string check_leaf(const SimpleConjunction &val, const std::vector<bool> &used) const
	{
		if (mode_ == HornMode::Exact) {
			for (std::size_t i = 0; i < used.size(); ++i)
				if (!used[i])
					return "clause " + print(hs_.gamma[i]) + " unused on a branch";
			if (!(val == hs_.z))
				return "leaf value " + print(val) + " differs from " + print(hs_.z);
		} else if (!hs_.z.subset_of(val)) {
			return "leaf value " + print(val) + " does not contain " + print(hs_.z);
		}
		return {};
	}

	const HornSequent &hs_;
	HornMode mode_;
};

} // namespace

std::string program_diagnostic(const HornProgram &p, const HornSequent &hs, HornMode mode)
{
	std::vector<bool> used(hs.gamma.size(), false);
	Validator v(hs, mode);
	return v.check(*p.root, hs.w, used);
}

bool validate_program(const HornProgram &p, const HornSequent &hs, HornMode mode)
{
	return program_diagnostic(p, hs, mode).empty();
}

nlohmann::json program_to_json(const HornProgram &p)
{
	std::function<nlohmann::json(const ProgramNode &)> node = [&](const ProgramNode &n) {
		nlohmann::json edges = nlohmann::json::array();
		for (const auto &e : n.edges) {
			nlohmann::json j{{"label", print(e.label)}, {"child", node(*e.child)}};
			if (e.source)
				j["source"] = {{"banged", e.source->banged},
				               {"index", e.source->index},
				               {"component", e.source->component}};
			edges.push_back(std::move(j));
		}
		return nlohmann::json{{"edges", edges}};
	};
	return node(*p.root);
}

// ---- decision --------------------------------------------------------------

namespace {

/* Search for a program. Atoms are numbered; values and remaining clause
 * counts are small vectors so states can be memoized. Identical gamma
 * clauses are grouped, and each group hands out its original indices in
 * order so the certificate names concrete clauses. */
class HornSearch {
public:
	HornSearch(const HornSequent &hs, HornMode mode, std::size_t cap) : hs_(hs), mode_(mode), cap_(cap)
	{
		for (std::size_t i = 0; i < hs.gamma.size(); ++i) {
			auto it = std::find_if(groups_.begin(), groups_.end(),
			                       [&](const Group &g) { return hs.gamma[g.indices[0]] == hs.gamma[i]; });
			if (it == groups_.end())
				groups_.push_back(Group{{i}});
			else
				it->indices.push_back(i);
		}
	}

	enum class Status { Proved, Failed, Unknown };
	struct Outcome {
		Status status;
		ProgramNodePtr node;
	};

	Outcome run()
	{
		std::vector<unsigned> rem;
		for (const auto &g : groups_)
			rem.push_back(static_cast<unsigned>(g.indices.size()));
		return solve(hs_.w, rem, cap_);
	}

	std::size_t nodes = 0;

private:
	struct Group {
		std::vector<std::size_t> indices;
	};

	bool leaf_ok(const SimpleConjunction &val, const std::vector<unsigned> &rem) const
	{
		if (mode_ == HornMode::Weakening)
			return hs_.z.subset_of(val);
		return val == hs_.z && std::all_of(rem.begin(), rem.end(), [](unsigned r) { return r == 0; });
	}

	Outcome solve(const SimpleConjunction &val, std::vector<unsigned> &rem, std::size_t bangs)
	{
		++nodes;
		auto key = std::make_tuple(val, rem, bangs);
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		Outcome out = expand(val, rem, bangs);
		memo_.emplace(std::move(key), out);
		return out;
	}

	static ProgramNodePtr node_with(std::vector<ProgramEdge> edges)
	{
		auto n = std::make_shared<ProgramNode>();
		n->edges = std::move(edges);
		return n;
	}

	Outcome expand(const SimpleConjunction &val, std::vector<unsigned> &rem, std::size_t bangs)
	{
		if (leaf_ok(val, rem))
			return {Status::Proved, std::make_shared<ProgramNode>()};
		bool unknown = false;

		auto try_clause = [&](const HornClause &c, ClauseRef ref, std::vector<unsigned> &r,
		                      std::size_t b) -> std::optional<ProgramNodePtr> {
			if (c.kind == HornClause::Kind::Plus) {
				if (!c.first.from.subset_of(val))
					return std::nullopt;
				std::vector<ProgramEdge> edges;
				for (std::size_t k = 0; k < 2; ++k) {
					const Implication &imp = k == 0 ? c.first : c.second;
					Outcome o = solve(imp.to + (val - imp.from), r, b);
					if (o.status == Status::Unknown)
						unknown = true;
					if (o.status != Status::Proved)
						return std::nullopt;
					ClauseRef rk = ref;
					rk.component = k;
					edges.push_back(ProgramEdge{imp, rk, o.node});
				}
				return node_with(std::move(edges));
			}
			auto comps = c.components();
			for (std::size_t k = 0; k < comps.size(); ++k) {
				if (!comps[k].from.subset_of(val))
					continue;
				Outcome o = solve(comps[k].to + (val - comps[k].from), r, b);
				if (o.status == Status::Unknown)
					unknown = true;
				if (o.status == Status::Proved) {
					ClauseRef rk = ref;
					rk.component = k;
					return node_with({ProgramEdge{comps[k], rk, o.node}});
				}
			}
			return std::nullopt;
		};

		for (std::size_t g = 0; g < groups_.size(); ++g) {
			if (rem[g] == 0)
				continue;
			std::size_t index = groups_[g].indices[groups_[g].indices.size() - rem[g]];
			--rem[g];
			auto r = try_clause(hs_.gamma[index], ClauseRef{false, index, 0}, rem, bangs);
			++rem[g];
			if (r)
				return {Status::Proved, *r};
		}
		for (std::size_t i = 0; i < hs_.delta.size(); ++i) {
			if (bangs == 0) {
				unknown = true;
				break;
			}
			auto r = try_clause(hs_.delta[i], ClauseRef{true, i, 0}, rem, bangs - 1);
			if (r)
				return {Status::Proved, *r};
		}
		return {unknown ? Status::Unknown : Status::Failed, nullptr};
	}

	const HornSequent &hs_;
	HornMode mode_;
	std::size_t cap_;
	std::vector<Group> groups_;
	std::map<std::tuple<SimpleConjunction, std::vector<unsigned>, std::size_t>, Outcome> memo_;
};

} // namespace

HornResult decide_horn(const HornSequent &hs, HornMode mode, std::size_t bang_cap)
{
	if (bang_cap == 0)
		bang_cap = normalize_two_sided(to_two_sided(hs)).total_size();
	if (hs.delta.empty())
		bang_cap = 0;
	HornSearch search(hs, mode, bang_cap);
	auto o = search.run();
	HornResult out;
	out.stats.nodes_expanded = search.nodes;
	switch (o.status) {
	case HornSearch::Status::Proved:
		out.verdict = Verdict::Provable;
		out.program = HornProgram{o.node};
		break;
	case HornSearch::Status::Failed: out.verdict = Verdict::NotProvable; break;
	case HornSearch::Status::Unknown: out.verdict = Verdict::Unknown; break;
	}
	return out;
}

// ---- encodings -------------------------------------------------------------

PartitionInstance parse_partition(std::string_view text)
{
	std::vector<std::vector<long>> lines;
	std::size_t line_no = 0;
	std::size_t start = 0;
	while (start <= text.size()) {
		std::size_t end = text.find('\n', start);
		if (end == std::string_view::npos)
			end = text.size();
		std::string_view line = text.substr(start, end - start);
		++line_no;
		std::vector<long> nums;
		std::size_t i = 0;
		while (i < line.size()) {
			if (std::isspace(static_cast<unsigned char>(line[i]))) {
				++i;
				continue;
			}
			if (!std::isdigit(static_cast<unsigned char>(line[i])))
				throw ParseError("expected a non-negative integer", line_no, i + 1);
			long v = 0;
			while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
				v = v * 10 + (line[i] - '0');
				if (v > 1000000)
					throw ParseError("number too large", line_no, i + 1);
				++i;
			}
			nums.push_back(v);
		}
		if (!nums.empty())
			lines.push_back(std::move(nums));
		start = end + 1;
	}
	if (lines.size() != 2 || lines[0].size() != 2)
		throw ParseError("expected a line 'b m' followed by a line of k integers", 1, 1);
	PartitionInstance inst;
	inst.b = static_cast<unsigned>(lines[0][0]);
	inst.m = static_cast<unsigned>(lines[0][1]);
	for (long v : lines[1])
		inst.s.push_back(static_cast<unsigned>(v));
	return inst;
}

std::string partition_bound_warning(const PartitionInstance &inst)
{
	for (unsigned v : inst.s)
		if (!(4 * v > inst.b && 2 * v < inst.b))
			return "element " + std::to_string(v) + " violates b/4 < s < b/2 for b = " + std::to_string(inst.b);
	return {};
}

HornSequent encode_3partition(const PartitionInstance &inst)
{
	if (inst.m == 0 || inst.s.size() != 3 * static_cast<std::size_t>(inst.m))
		throw std::invalid_argument("3-Partition instance needs k = 3m > 0 numbers");
	HornSequent hs;
	hs.w = SimpleConjunction::atom("p", 3);
	hs.z = hs.w;
	for (unsigned v : inst.s) {
		if (v == 0 || v > inst.b)
			throw std::invalid_argument("3-Partition numbers must lie in 1..b");
		hs.gamma.push_back(HornClause::plain(SimpleConjunction::atom("p"),
		                                     SimpleConjunction::atom("q", inst.b - v) + SimpleConjunction::atom("r", v)));
	}
	for (unsigned j = 0; j < inst.m; ++j)
		hs.gamma.push_back(HornClause::plain(SimpleConjunction::atom("q", 2 * inst.b) + SimpleConjunction::atom("r", inst.b),
		                                     SimpleConjunction::atom("p", 3)));
	return hs;
}

namespace {

bool has_repeats(const SimpleConjunction &c)
{
	return std::any_of(c.counts().begin(), c.counts().end(), [](const auto &kv) { return kv.second > 1; });
}

} // namespace

HornSequent encode_task_sequent(const TaskSequent &ts)
{
	if (has_repeats(ts.z))
		throw std::invalid_argument("task sequent succedent repeats an atom");
	std::size_t k = 0;
	for (const auto &c : ts.gamma) {
		if (has_repeats(c.v))
			throw std::invalid_argument("task clause repeats an atom in its premise");
		if (c.embedded)
			++k;
	}
	std::set<std::string> names;
	auto collect = [&](const SimpleConjunction &c) {
		for (const auto &[a, n] : c.counts())
			names.insert(a);
	};
	collect(ts.w);
	collect(ts.z);
	for (const auto &c : ts.gamma) {
		collect(c.u);
		collect(c.v);
		collect(c.y);
	}
	auto r = [](std::size_t i) { return SimpleConjunction::atom("r" + std::to_string(i)); };
	const SimpleConjunction t = SimpleConjunction::atom("t");
	for (std::size_t i = 0; i <= k; ++i)
		if (names.count("r" + std::to_string(i)))
			throw std::invalid_argument("atom r" + std::to_string(i) + " is reserved by the encoding");
	if (names.count("t"))
		throw std::invalid_argument("atom t is reserved by the encoding");

	HornSequent hs;
	hs.w = r(0) + ts.w;
	hs.z = t + ts.z;
	hs.gamma.push_back(HornClause::plain(r(0) + ts.z, t + ts.z));
	std::size_t j = 0;
	for (const auto &c : ts.gamma) {
		if (!c.embedded) {
			for (std::size_t i = 0; i <= k; ++i)
				hs.gamma.push_back(HornClause::plain(r(i) + c.v, r(i) + c.v + c.y));
			continue;
		}
		++j;
		hs.gamma.push_back(HornClause::plain(r(j) + c.v, t + ts.z));
		for (std::size_t i = 0; i <= k; ++i)
			hs.gamma.push_back(HornClause::plus(r(i), r(j) + c.u, r(i) + c.y));
	}
	return hs;
}

} // namespace llwb
