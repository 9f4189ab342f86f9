/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/mall/qbf.hpp"

#include <cctype>
#include <stdexcept>

#include "llwb/core/syntax.hpp"

namespace llwb {

BoolPtr bvar(std::string name) { return std::make_shared<const BoolExpr>(BoolExpr{BoolExpr::Op::Var, std::move(name), {}, {}}); }
BoolPtr bnot(BoolPtr x) { return std::make_shared<const BoolExpr>(BoolExpr{BoolExpr::Op::Not, {}, std::move(x), {}}); }
BoolPtr band(BoolPtr x, BoolPtr y)
{
	return std::make_shared<const BoolExpr>(BoolExpr{BoolExpr::Op::And, {}, std::move(x), std::move(y)});
}
BoolPtr bor(BoolPtr x, BoolPtr y) { return bnot(band(bnot(std::move(x)), bnot(std::move(y)))); }

std::set<std::string> variables(const BoolPtr &m)
{
	switch (m->op) {
	case BoolExpr::Op::Var:
		return {m->var};
	case BoolExpr::Op::Not:
		return variables(m->a);
	case BoolExpr::Op::And: {
		auto l = variables(m->a);
		auto r = variables(m->b);
		l.insert(r.begin(), r.end());
		return l;
	}
	}
	return {};
}

std::size_t bool_size(const BoolPtr &m)
{
	switch (m->op) {
	case BoolExpr::Op::Var: return 1;
	case BoolExpr::Op::Not: return 1 + bool_size(m->a);
	case BoolExpr::Op::And: return 1 + bool_size(m->a) + bool_size(m->b);
	}
	return 0;
}

std::string print(const BoolPtr &m)
{
	switch (m->op) {
	case BoolExpr::Op::Var:
		return m->var;
	case BoolExpr::Op::Not:
		return "~" + (m->a->op == BoolExpr::Op::And ? "(" + print(m->a) + ")" : print(m->a));
	case BoolExpr::Op::And: {
		std::string r = print(m->b);
		if (m->b->op == BoolExpr::Op::And)
			r = "(" + r + ")";
		return print(m->a) + " & " + r;
	}
	}
	return {};
}

std::string print(const Qbf &g)
{
	std::string out;
	for (const auto &[q, x] : g.prefix)
		out += (q == Quantifier::Forall ? "A " : "E ") + x + ". ";
	return out + print(g.matrix);
}

namespace {

class QbfParser {
public:
	explicit QbfParser(std::string_view s) : s_(s) {}

	Qbf run()
	{
		Qbf g;
		for (;;) {
			skip();
			if (pos_ < s_.size() && (s_[pos_] == 'A' || s_[pos_] == 'E')) {
				Quantifier q = s_[pos_] == 'A' ? Quantifier::Forall : Quantifier::Exists;
				++pos_;
				std::string x = ident();
				skip();
				if (pos_ >= s_.size() || s_[pos_] != '.')
					fail("expected '.' after quantified variable");
				++pos_;
				g.prefix.emplace_back(q, x);
			} else {
				break;
			}
		}
		g.matrix = disj();
		skip();
		if (pos_ != s_.size())
			fail("unexpected trailing input");
		return g;
	}

private:
	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	[[noreturn]] void fail(const std::string &msg) const
	{
		std::size_t line = 1, col = 1;
		for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
			if (s_[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
		throw ParseError(msg, line, col);
	}

	std::string ident()
	{
		skip();
		std::size_t start = pos_;
		if (pos_ >= s_.size() || !(s_[pos_] >= 'a' && s_[pos_] <= 'z'))
			fail("expected a variable name");
		while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
		                            std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
			++pos_;
		return std::string(s_.substr(start, pos_ - start));
	}

	bool eat(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	BoolPtr disj()
	{
		BoolPtr x = conj();
		while (eat('|'))
			x = bor(x, conj());
		return x;
	}

	BoolPtr conj()
	{
		BoolPtr x = unary();
		while (eat('&'))
			x = band(x, unary());
		return x;
	}

	BoolPtr unary()
	{
		if (eat('~'))
			return bnot(unary());
		if (eat('(')) {
			BoolPtr x = disj();
			if (!eat(')'))
				fail("expected ')'");
			return x;
		}
		return bvar(ident());
	}

	std::string_view s_;
	std::size_t pos_ = 0;
};

void check_closed(const Qbf &g)
{
	std::set<std::string> bound;
	for (const auto &[q, x] : g.prefix)
		if (!bound.insert(x).second)
			throw std::invalid_argument("variable " + x + " is bound twice");
	for (const auto &v : variables(g.matrix))
		if (!bound.count(v))
			throw std::invalid_argument("variable " + v + " is unbound");
}

bool eval_from(const Qbf &g, std::size_t i, Assignment &a)
{
	if (i == g.prefix.size())
		return eval_bool(g.matrix, a);
	const auto &[q, x] = g.prefix[i];
	for (bool v : {false, true}) {
		a[x] = v;
		bool r = eval_from(g, i + 1, a);
		if (q == Quantifier::Exists && r)
			return true;
		if (q == Quantifier::Forall && !r)
			return false;
	}
	return q == Quantifier::Forall;
}

Formula lit(const std::string &x, bool negated = false) { return Formula::atom(x, negated); }

} // namespace

Qbf parse_qbf(std::string_view text) { return QbfParser(text).run(); }

bool eval_bool(const BoolPtr &m, const Assignment &i)
{
	switch (m->op) {
	case BoolExpr::Op::Var: {
		auto it = i.find(m->var);
		if (it == i.end())
			throw std::invalid_argument("variable " + m->var + " is unbound");
		return it->second;
	}
	case BoolExpr::Op::Not:
		return !eval_bool(m->a, i);
	case BoolExpr::Op::And:
		return eval_bool(m->a, i) && eval_bool(m->b, i);
	}
	return false;
}

bool eval_qbf(const Qbf &g)
{
	check_closed(g);
	Assignment a;
	return eval_from(g, 0, a);
}

std::vector<Formula> encode_assignment(const Assignment &i)
{
	std::vector<Formula> out;
	for (const auto &[x, v] : i)
		out.push_back(lit(x, v));
	return out;
}

Formula not_gadget(const Formula &x, const Formula &y)
{
	return plus(tensor(x, y), tensor(negate(x), negate(y)));
}

Formula and_gadget(const Formula &x, const Formula &y, const Formula &b)
{
	Formula nx = negate(x), ny = negate(y), nb = negate(b);
	return plus(plus(plus(tensor(tensor(x, y), nb), tensor(tensor(nx, ny), b)), tensor(tensor(x, ny), b)),
	            tensor(tensor(nx, y), b));
}

Formula copy_gadget(const Formula &x)
{
	Formula nx = negate(x);
	return plus(tensor(x, par(nx, nx)), tensor(nx, par(x, x)));
}

Formula copy_all(const std::set<std::string> &vars)
{
	if (vars.empty())
		throw std::invalid_argument("copy_all of an empty variable set");
	auto it = vars.begin();
	Formula acc = copy_gadget(lit(*it));
	for (++it; it != vars.end(); ++it)
		acc = par(acc, copy_gadget(lit(*it)));
	return acc;
}

std::string FreshNames::named(const std::string &base)
{
	std::string cand = base;
	for (int i = 1; used_.count(cand); ++i)
		cand = base + "_" + std::to_string(i);
	used_.insert(cand);
	return cand;
}

std::string FreshNames::gadget()
{
	std::string cand;
	do
		cand = "a" + std::to_string(++counter_);
	while (used_.count(cand));
	used_.insert(cand);
	return cand;
}

Formula encode_matrix(const BoolPtr &m, const std::string &out, FreshNames &names)
{
	Formula g = lit(out);
	switch (m->op) {
	case BoolExpr::Op::Var: {
		Formula x = lit(m->var);
		return plus(tensor(negate(x), g), tensor(x, negate(g)));
	}
	case BoolExpr::Op::Not: {
		std::string a = names.gadget();
		return par(not_gadget(lit(a), g), encode_matrix(m->a, a, names));
	}
	case BoolExpr::Op::And: {
		std::string a = names.gadget();
		std::string b = names.gadget();
		Formula f = par(par(and_gadget(lit(a), lit(b), g), encode_matrix(m->a, a, names)), encode_matrix(m->b, b, names));
		std::set<std::string> shared;
		auto vl = variables(m->a), vr = variables(m->b);
		for (const auto &v : vl)
			if (vr.count(v))
				shared.insert(v);
		if (!shared.empty())
			f = par(f, copy_all(shared));
		return f;
	}
	}
	return g;
}

QbfEncoding encode_qbf_full(const Qbf &g)
{
	check_closed(g);
	auto vars = variables(g.matrix);
	for (const auto &[q, x] : g.prefix)
		if (!vars.count(x))
			throw std::invalid_argument("quantified variable " + x + " does not occur in the matrix");

	std::set<std::string> reserved;
	for (const auto &[q, x] : g.prefix)
		reserved.insert(x);
	FreshNames names(reserved);
	QbfEncoding enc;
	std::size_t n = g.prefix.size();
	for (std::size_t i = 0; i <= n; ++i)
		enc.latches.push_back(names.named("q" + std::to_string(i)));
	enc.output = names.named("g");

	std::vector<Formula> fs;
	fs.push_back(lit(enc.latches[n]));
	// The outermost quantifier owns q_n, the innermost q_1.
	for (std::size_t k = 0; k < n; ++k) {
		const auto &[q, x] = g.prefix[k];
		std::size_t i = n - k; // clause q_i^ * ((x | q_{i-1}) op (x^ | q_{i-1}))
		Formula qi = lit(enc.latches[i]), qp = lit(enc.latches[i - 1]);
		Formula l = par(lit(x), qp), r = par(lit(x, true), qp);
		fs.push_back(tensor(negate(qi), q == Quantifier::Forall ? with(l, r) : plus(l, r)));
	}
	fs.push_back(tensor(negate(lit(enc.latches[0])), encode_matrix(g.matrix, enc.output, names)));
	fs.push_back(lit(enc.output));
	enc.sequent = Sequent(std::move(fs));
	return enc;
}

Sequent encode_qbf(const Qbf &g) { return encode_qbf_full(g).sequent; }

} // namespace llwb
