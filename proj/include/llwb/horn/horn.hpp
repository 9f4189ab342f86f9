/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "llwb/calculus/prove.hpp"
#include "llwb/core/syntax.hpp"

namespace llwb {

/* A tensor of positive atoms, kept as a multiset (atom -> multiplicity,
 * zero counts never stored). The empty conjunction reads as 1. */
class SimpleConjunction {
public:
	SimpleConjunction() = default;
	SimpleConjunction(std::initializer_list<std::pair<const std::string, unsigned>> init);

	static SimpleConjunction atom(const std::string &name, unsigned count = 1);

	unsigned count(const std::string &atom) const;
	void add(const std::string &atom, unsigned n = 1);
	const std::map<std::string, unsigned> &counts() const { return counts_; }
	std::size_t size() const; // total number of atom occurrences
	bool empty() const { return counts_.empty(); }

	/* Multiset containment: this is a sub-multiset of `other`. */
	bool subset_of(const SimpleConjunction &other) const;

	friend SimpleConjunction operator+(const SimpleConjunction &a, const SimpleConjunction &b);
	/* Multiset difference; requires b.subset_of(a). */
	friend SimpleConjunction operator-(const SimpleConjunction &a, const SimpleConjunction &b);
	friend bool operator==(const SimpleConjunction &, const SimpleConjunction &) = default;
	friend auto operator<=>(const SimpleConjunction &, const SimpleConjunction &) = default;

private:
	std::map<std::string, unsigned> counts_;
};

Formula to_formula(const SimpleConjunction &c);
std::string print(const SimpleConjunction &c);

/* X -o Y with simple conjunctions on both sides. */
struct Implication {
	SimpleConjunction from, to;
	friend bool operator==(const Implication &, const Implication &) = default;
	friend auto operator<=>(const Implication &, const Implication &) = default;
};

std::string print(const Implication &i);

struct HornClause {
	enum class Kind { Plain, Plus, With };
	Kind kind = Kind::Plain;
	/* Plain: first. Plus: first.from -o (first.to + second.to), with
	 * first.from == second.from. With: (first) & (second). */
	Implication first;
	Implication second;
	bool banged = false;

	static HornClause plain(SimpleConjunction x, SimpleConjunction y, bool banged = false);
	static HornClause plus(SimpleConjunction x, SimpleConjunction y1, SimpleConjunction y2, bool banged = false);
	static HornClause with(Implication a, Implication b, bool banged = false);

	/* The implications this clause can contribute as a program edge. */
	std::vector<Implication> components() const;

	friend bool operator==(const HornClause &, const HornClause &) = default;
	friend auto operator<=>(const HornClause &, const HornClause &) = default;
};

Formula to_formula(const HornClause &c);
std::string print(const HornClause &c);

/* W, Gamma, !Delta |- Z */
struct HornSequent {
	SimpleConjunction w;
	std::vector<HornClause> gamma;
	std::vector<HornClause> delta; // stored without the bang flag set
	SimpleConjunction z;
};

/* Parses `p^3, [p -o q^2 * r], ![a -o b] |- q^2 * r`. Throws ParseError. */
HornSequent parse_horn(std::string_view text);
std::string print(const HornSequent &hs);

/* Linear logic reading: W's atoms one by one, the clauses (banged ones
 * under !), |- Z. */
TwoSidedSequent to_two_sided(const HornSequent &hs);

/* Quick syntactic check used by the CLI router. */
bool looks_like_horn(std::string_view text);

// ---- branching Horn programs ----------------------------------------------

struct ClauseRef {
	bool banged = false;
	std::size_t index = 0;     // into HornSequent::gamma or ::delta
	std::size_t component = 0; // with: chosen conjunct; plus: which disjunct
	friend bool operator==(const ClauseRef &, const ClauseRef &) = default;
};

struct ProgramNode;
using ProgramNodePtr = std::shared_ptr<const ProgramNode>;

struct ProgramEdge {
	Implication label;
	/* Which sequent clause this edge stems from. Optional: programs written
	 * by hand may leave it to the validator to find a consistent choice. */
	std::optional<ClauseRef> source;
	ProgramNodePtr child;
};

struct ProgramNode {
	std::vector<ProgramEdge> edges; // 0 (leaf), 1, or 2 (branching)
};

struct HornProgram {
	ProgramNodePtr root = std::make_shared<ProgramNode>();
};

std::size_t vertex_count(const HornProgram &p);

struct ExecResult {
	bool defined = true;
	/* First vertex (preorder, root = 0) whose value is undefined. */
	std::optional<std::size_t> undefined_vertex;
	/* Values at the leaves in preorder; empty when undefined. */
	std::vector<SimpleConjunction> leaves;
};

ExecResult exec_program(const HornProgram &p, const SimpleConjunction &w);

enum class HornMode { Exact, Weakening };

/* Empty when `p` is a program for `hs`: every edge stems from a clause of
 * the sequent (branching vertices from one plus-clause), each gamma clause
 * is used exactly once on every branch (at most once in weakening mode),
 * and every leaf evaluates to Z (a superset of Z in weakening mode). */
std::string program_diagnostic(const HornProgram &p, const HornSequent &hs, HornMode mode = HornMode::Exact);
bool validate_program(const HornProgram &p, const HornSequent &hs, HornMode mode = HornMode::Exact);

nlohmann::json program_to_json(const HornProgram &p);

struct HornResult {
	Verdict verdict = Verdict::Unknown;
	std::optional<HornProgram> program; // set iff provable
	SearchStats stats;
};

/* Searches for a program that validates against `hs`. Bang clauses are
 * capped at `bang_cap` uses per branch (0 selects the size of the linear
 * logic reading); hitting the cap without a proof yields Unknown. */
HornResult decide_horn(const HornSequent &hs, HornMode mode = HornMode::Exact, std::size_t bang_cap = 0);

// ---- encodings -------------------------------------------------------------

struct PartitionInstance {
	unsigned b = 0;
	unsigned m = 0;
	std::vector<unsigned> s;
};

/* "b m" on the first line, the k numbers on the second. Throws ParseError. */
PartitionInstance parse_partition(std::string_view text);

/* Empty when b/4 < s_i < b/2 for all i; otherwise a warning message. */
std::string partition_bound_warning(const PartitionInstance &inst);

/* p^3, PR_s, RP_m |- p^3. Throws std::invalid_argument unless k = 3m. */
HornSequent encode_3partition(const PartitionInstance &inst);

/* Intuitionistic task sequents W, Gamma |- Z where each member of Gamma is
 * V -> Y or (U -> V) -> Y over simple conjunctions. */
struct TaskClause {
	bool embedded = false;
	SimpleConjunction u; // embedded only
	SimpleConjunction v;
	SimpleConjunction y;
};

struct TaskSequent {
	SimpleConjunction w;
	std::vector<TaskClause> gamma;
	SimpleConjunction z;
};

/* `p * q, [p -> r], [(r -> s) -> t] |- s`. Throws ParseError. */
TaskSequent parse_task(std::string_view text);
std::string print(const TaskSequent &ts);

/* Throws std::invalid_argument on malformed task sequents (repeated atoms in
 * Z or in a V). The atom names t and r0..rk must not occur in the input. */
HornSequent encode_task_sequent(const TaskSequent &ts);

} // namespace llwb
