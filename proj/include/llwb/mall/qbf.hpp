/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llwb/core/sequent.hpp"

namespace llwb {

struct BoolExpr;
using BoolPtr = std::shared_ptr<const BoolExpr>;

/* Boolean formula over {variable, not, and}; disjunction is sugar. */
struct BoolExpr {
	enum class Op { Var, Not, And };
	Op op;
	std::string var;
	BoolPtr a, b;
};

BoolPtr bvar(std::string name);
BoolPtr bnot(BoolPtr x);
BoolPtr band(BoolPtr x, BoolPtr y);
/* x | y  :=  ~(~x & ~y) */
BoolPtr bor(BoolPtr x, BoolPtr y);

std::set<std::string> variables(const BoolPtr &m);
std::size_t bool_size(const BoolPtr &m);
std::string print(const BoolPtr &m);

enum class Quantifier { Forall, Exists };

struct Qbf {
	/* Outermost quantifier first. */
	std::vector<std::pair<Quantifier, std::string>> prefix;
	BoolPtr matrix;
};

std::string print(const Qbf &g);

/* Syntax: "A x. E y. (x & y) | (~x & ~y)". Throws ParseError. */
Qbf parse_qbf(std::string_view text);

using Assignment = std::map<std::string, bool>;

/* Throws std::invalid_argument on an unbound variable. */
bool eval_bool(const BoolPtr &m, const Assignment &i);
bool eval_qbf(const Qbf &g);

/* X true gives x^, X false gives x. */
std::vector<Formula> encode_assignment(const Assignment &i);

/* Gadgets, printed left-associated. */
Formula not_gadget(const Formula &x, const Formula &y);
Formula and_gadget(const Formula &x, const Formula &y, const Formula &b);
Formula copy_gadget(const Formula &x);
Formula copy_all(const std::set<std::string> &vars);

/* Supplies names not occurring in a reserved set. */
class FreshNames {
public:
	explicit FreshNames(std::set<std::string> reserved) : used_(std::move(reserved)) {}
	/* `base` itself if free, otherwise base_1, base_2, ... */
	std::string named(const std::string &base);
	/* a1, a2, ... */
	std::string gadget();

private:
	std::set<std::string> used_;
	int counter_ = 0;
};

/* [M]_out with gadget outputs drawn from `names`. */
Formula encode_matrix(const BoolPtr &m, const std::string &out, FreshNames &names);

/* The representing sequent |- q_n, clauses..., (q_0^ * [M]_g), g.
 * Throws std::invalid_argument for open formulas, repeated binders, and
 * quantified variables absent from the matrix. */
struct QbfEncoding {
	Sequent sequent;
	std::string output;               // g
	std::vector<std::string> latches; // q_0 ... q_n
};
QbfEncoding encode_qbf_full(const Qbf &g);
Sequent encode_qbf(const Qbf &g);

} // namespace llwb
