/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/additive/additive.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "llwb/core/fragment.hpp"

namespace llwb {

namespace {

void flatten(const Formula &f, std::vector<Formula> &out, std::vector<std::vector<std::size_t>> &kids)
{
	std::size_t me = out.size();
	out.push_back(f);
	kids.emplace_back();
	if (f.is_binary()) {
		for (const Formula *c : {&f.left(), &f.right()}) {
			kids[me].push_back(out.size());
			flatten(*c, out, kids);
		}
	}
}

/* Literals, the four units, plus and with. */
bool additive_only(const Formula &f)
{
	if (f.is_modal())
		return false;
	if (f.is_binary())
		return (f.is(Connective::Plus) || f.is(Connective::With)) && additive_only(f.left()) &&
		       additive_only(f.right());
	return true;
}

void require_additive(const std::optional<Formula> &f)
{
	if (f && !additive_only(*f))
		throw FragmentError("the grid procedure expects additive formulas, got " + print(*f));
}

/* Children before parents: reverse preorder works because a child always
 * has a larger preorder index than its parent. */
std::vector<std::size_t> order_of(std::size_t n)
{
	std::vector<std::size_t> out{Grid::epsilon};
	for (std::size_t i = n; i-- > 0;)
		out.push_back(i);
	return out;
}

const std::vector<std::size_t> no_kids;

} // namespace

Grid::Grid(std::optional<Formula> left, std::optional<Formula> right) : left_(std::move(left)), right_(std::move(right))
{
	require_additive(left_);
	require_additive(right_);
	if (left_)
		flatten(*left_, rows_, row_kids_);
	if (right_)
		flatten(*right_, cols_, col_kids_);
}

const std::vector<std::size_t> &Grid::row_children(std::size_t i) const
{
	return i == epsilon ? no_kids : row_kids_.at(i);
}

const std::vector<std::size_t> &Grid::col_children(std::size_t j) const
{
	return j == epsilon ? no_kids : col_kids_.at(j);
}

std::vector<std::size_t> Grid::row_order() const { return order_of(rows_.size()); }
std::vector<std::size_t> Grid::col_order() const { return order_of(cols_.size()); }

Grid::Link Grid::root() const { return {left_ ? 0 : epsilon, right_ ? 0 : epsilon}; }

Grid build_grid(const Formula &a, const Formula &b)
{
	Grid g(a, b);
	for (std::size_t i = 0; i < g.rows().size(); ++i)
		for (std::size_t j = 0; j < g.cols().size(); ++j)
			if (g.rows()[i].is_atom() && g.rows()[i] == g.cols()[j])
				g.links.insert({i, j});
	return g;
}

std::string to_string(GridRule r)
{
	switch (r) {
	case GridRule::Axiom: return "axiom";
	case GridRule::PlusRight: return "plus-right";
	case GridRule::WithRight: return "with-right";
	case GridRule::PlusLeft: return "plus-left";
	case GridRule::WithLeft: return "with-left";
	case GridRule::Top: return "top";
	case GridRule::Zero: return "zero";
	case GridRule::OneRight: return "one-right";
	case GridRule::OneLeft: return "one-left";
	case GridRule::BotLeft: return "bot-left";
	case GridRule::BotRight: return "bot-right";
	}
	return "?";
}

namespace {

/* Tries every non-axiom rule for the cell (x, y) against `links`. */
class Deriver {
public:
	Deriver(const Grid &g, ClosureStats *stats) : g_(g), stats_(stats) {}

	std::optional<GridStep> derive(std::size_t x, std::size_t y, const std::set<Grid::Link> &links) const
	{
		const Formula *X = x == Grid::epsilon ? nullptr : &g_.rows()[x];
		const Formula *Y = y == Grid::epsilon ? nullptr : &g_.cols()[y];
		auto has = [&](std::size_t a, std::size_t b) {
			if (stats_)
				++stats_->inspections;
			return links.count({a, b}) > 0;
		};
		auto step = [&](GridRule r, std::vector<Grid::Link> prem) {
			return GridStep{{x, y}, r, std::move(prem)};
		};
		if (Y && Y->is(UnitKind::Top))
			return step(GridRule::Top, {});
		if (X && X->is(UnitKind::Zero))
			return step(GridRule::Zero, {});
		if (!X && Y && Y->is(UnitKind::One))
			return step(GridRule::OneRight, {});
		if (X && !Y && X->is(UnitKind::Bot))
			return step(GridRule::BotLeft, {});
		if (Y && Y->is(Connective::Plus)) {
			for (std::size_t c : g_.col_children(y))
				if (has(x, c))
					return step(GridRule::PlusRight, {{x, c}});
		}
		if (Y && Y->is(Connective::With)) {
			const auto &k = g_.col_children(y);
			if (has(x, k[0]) && has(x, k[1]))
				return step(GridRule::WithRight, {{x, k[0]}, {x, k[1]}});
		}
		if (X && X->is(Connective::Plus)) {
			const auto &k = g_.row_children(x);
			if (has(k[0], y) && has(k[1], y))
				return step(GridRule::PlusLeft, {{k[0], y}, {k[1], y}});
		}
		if (X && X->is(Connective::With)) {
			for (std::size_t c : g_.row_children(x))
				if (has(c, y))
					return step(GridRule::WithLeft, {{c, y}});
		}
		if (X && X->is(UnitKind::One) && has(Grid::epsilon, y))
			return step(GridRule::OneLeft, {{Grid::epsilon, y}});
		if (Y && Y->is(UnitKind::Bot) && has(x, Grid::epsilon))
			return step(GridRule::BotRight, {{x, Grid::epsilon}});
		return std::nullopt;
	}

private:
	const Grid &g_;
	ClosureStats *stats_;
};

} // namespace

Grid closure(const Grid &g, ClosureStats *stats)
{
	Grid out = g;
	Deriver d(out, stats);
	auto rows = out.row_order(), cols = out.col_order();
	std::reverse(rows.begin(), rows.end());
	std::reverse(cols.begin(), cols.end());
	bool changed = true;
	while (changed) {
		changed = false;
		if (stats)
			++stats->passes;
		for (std::size_t x : rows)
			for (std::size_t y : cols)
				if (!out.links.count({x, y}) && d.derive(x, y, out.links)) {
					out.links.insert({x, y});
					changed = true;
				}
	}
	return out;
}

Grid closure_sweep(const Grid &g, ClosureStats *stats, std::vector<GridStep> *steps)
{
	Grid out = g;
	Deriver d(out, stats);
	if (stats)
		++stats->passes;
	for (std::size_t x : out.row_order())
		for (std::size_t y : out.col_order()) {
			if (out.links.count({x, y})) {
				if (steps)
					steps->push_back(GridStep{{x, y}, GridRule::Axiom, {}});
				continue;
			}
			if (auto s = d.derive(x, y, out.links)) {
				out.links.insert({x, y});
				if (steps)
					steps->push_back(std::move(*s));
			}
		}
	return out;
}

namespace {

AllResult decide_grid(const Grid &g0)
{
	Grid g = g0;
	for (std::size_t i = 0; i < g.rows().size(); ++i)
		for (std::size_t j = 0; j < g.cols().size(); ++j)
			if (g.rows()[i].is_atom() && g.rows()[i] == g.cols()[j])
				g.links.insert({i, j});
	AllResult out;
	std::vector<GridStep> steps;
	Grid c = closure_sweep(g, &out.stats, &steps);
	if (!c.links.count(g.root()))
		return out;
	out.verdict = Verdict::Provable;
	std::map<Grid::Link, const GridStep *> by_link;
	for (const auto &s : steps)
		by_link[s.link] = &s;
	std::set<Grid::Link> emitted;
	std::function<void(const Grid::Link &)> emit = [&](const Grid::Link &l) {
		if (emitted.count(l))
			return;
		const GridStep *s = by_link.at(l);
		for (const auto &p : s->premises)
			emit(p);
		emitted.insert(l);
		out.derivation.push_back(*s);
	};
	emit(g.root());
	return out;
}

} // namespace

AllResult decide_all(const Formula &a, const Formula &b) { return decide_grid(Grid(a, b)); }

AllResult decide_all(const TwoSidedSequent &s)
{
	if (s.antecedent.size() > 1 || s.succedent.size() > 1)
		throw std::invalid_argument("the grid procedure handles at most one formula on each side");
	std::optional<Formula> a, b;
	if (!s.antecedent.empty())
		a = s.antecedent[0];
	if (!s.succedent.empty())
		b = s.succedent[0];
	return decide_grid(Grid(a, b));
}

bool check_grid_derivation(const Grid &g, const std::vector<GridStep> &derivation, std::string *why)
{
	auto fail = [&](const std::string &msg) {
		if (why)
			*why = msg;
		return false;
	};
	auto valid = [&](std::size_t i, bool row) {
		return i == Grid::epsilon || i < (row ? g.rows().size() : g.cols().size());
	};
	std::set<Grid::Link> known;
	Deriver d(g, nullptr);
	for (std::size_t k = 0; k < derivation.size(); ++k) {
		const GridStep &s = derivation[k];
		auto [x, y] = s.link;
		if (!valid(x, true) || !valid(y, false))
			return fail("step " + std::to_string(k) + " names a cell outside the grid");
		for (const auto &p : s.premises)
			if (!known.count(p))
				return fail("step " + std::to_string(k) + " uses a premise not derived before");
		if (s.rule == GridRule::Axiom) {
			if (x == Grid::epsilon || y == Grid::epsilon || !g.rows()[x].is_atom() || g.rows()[x] != g.cols()[y])
				return fail("step " + std::to_string(k) + " is not an axiom link");
		} else {
			/* Re-derive against exactly the stated premises. */
			std::set<Grid::Link> prem(s.premises.begin(), s.premises.end());
			auto again = d.derive(x, y, prem);
			if (!again || again->rule != s.rule)
				return fail("step " + std::to_string(k) + " does not follow by " + to_string(s.rule));
		}
		known.insert(s.link);
	}
	if (derivation.empty() || derivation.back().link != g.root())
		return fail("derivation does not end in the root link");
	return true;
}

std::string grid_to_dot(const Grid &g)
{
	auto esc = [](std::string s) {
		std::string out;
		for (char c : s) {
			if (c == '&')
				out += "&amp;";
			else if (c == '<')
				out += "&lt;";
			else if (c == '>')
				out += "&gt;";
			else
				out += c;
		}
		return out;
	};
	auto label = [&](const std::vector<Formula> &v, std::size_t i) {
		return i == Grid::epsilon ? std::string("&#949;") : esc(print(v[i]));
	};
	std::vector<std::size_t> rows{Grid::epsilon}, cols{Grid::epsilon};
	for (std::size_t i = 0; i < g.rows().size(); ++i)
		rows.push_back(i);
	for (std::size_t j = 0; j < g.cols().size(); ++j)
		cols.push_back(j);
	std::ostringstream os;
	os << "digraph grid {\n  node [shape=plaintext];\n  grid [label=<<table border=\"0\" cellborder=\"1\" "
	      "cellspacing=\"0\">\n";
	os << "    <tr><td></td>";
	for (std::size_t j : cols)
		os << "<td>" << label(g.cols(), j) << "</td>";
	os << "</tr>\n";
	for (std::size_t i : rows) {
		os << "    <tr><td>" << label(g.rows(), i) << "</td>";
		for (std::size_t j : cols)
			os << (g.links.count({i, j}) ? "<td bgcolor=\"red\"> </td>" : "<td> </td>");
		os << "</tr>\n";
	}
	os << "  </table>>];\n}\n";
	return os.str();
}

} // namespace llwb
