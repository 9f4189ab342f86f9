/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace llwb {

enum class Connective { Tensor, Par, Plus, With };
enum class UnitKind { One, Bot, Top, Zero };
enum class Modality { OfCourse, WhyNot };
enum class Polarity { Positive, Negative };

/* Propositional linear logic formula in negation normal form.
 *
 * A formula is an immutable tree shared by reference; copies are cheap and
 * structural equality/ordering are total and deterministic. Negation only
 * ever appears on atoms, so `negate` is the sole way to dualize. */
class Formula {
public:
	enum class Kind { Atom, Unit, Binary, Modal };

	static Formula atom(std::string name, bool negated = false);
	static Formula unit(UnitKind k);
	static Formula binary(Connective c, Formula left, Formula right);
	static Formula modal(Modality m, Formula body);

	static Formula one() { return unit(UnitKind::One); }
	static Formula bot() { return unit(UnitKind::Bot); }
	static Formula top() { return unit(UnitKind::Top); }
	static Formula zero() { return unit(UnitKind::Zero); }

	Kind kind() const;
	bool is_atom() const { return kind() == Kind::Atom; }
	bool is_unit() const { return kind() == Kind::Unit; }
	bool is_binary() const { return kind() == Kind::Binary; }
	bool is_modal() const { return kind() == Kind::Modal; }
	bool is(Connective c) const { return is_binary() && connective() == c; }
	bool is(UnitKind u) const { return is_unit() && unit_kind() == u; }
	bool is(Modality m) const { return is_modal() && modality() == m; }

	/* Only meaningful for the matching kind; asserts otherwise. */
	const std::string &name() const;
	bool negated() const;
	UnitKind unit_kind() const;
	Connective connective() const;
	Modality modality() const;
	const Formula &left() const;
	const Formula &right() const;
	const Formula &body() const;

	/* Number of nodes of the tree (atoms count once, negated or not). */
	std::size_t size() const;
	std::size_t hash() const;

	friend bool operator==(const Formula &a, const Formula &b);
	friend std::strong_ordering operator<=>(const Formula &a, const Formula &b);

private:
	struct Node;
	explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
	std::shared_ptr<const Node> node_;
};

inline Formula tensor(Formula a, Formula b) { return Formula::binary(Connective::Tensor, std::move(a), std::move(b)); }
inline Formula par(Formula a, Formula b) { return Formula::binary(Connective::Par, std::move(a), std::move(b)); }
inline Formula plus(Formula a, Formula b) { return Formula::binary(Connective::Plus, std::move(a), std::move(b)); }
inline Formula with(Formula a, Formula b) { return Formula::binary(Connective::With, std::move(a), std::move(b)); }
inline Formula ofcourse(Formula a) { return Formula::modal(Modality::OfCourse, std::move(a)); }
inline Formula whynot(Formula a) { return Formula::modal(Modality::WhyNot, std::move(a)); }

Connective dual(Connective c);
UnitKind dual(UnitKind u);
Modality dual(Modality m);

/* Linear negation (de Morgan dual); an involution. */
Formula negate(const Formula &f);

enum class ImplicationKind { Multiplicative, Additive };

/* A -o B := A^ | B, and A +> B := A^ + B. */
Formula desugar_implication(ImplicationKind kind, const Formula &a, const Formula &b);

/* Top-level polarity; atoms are positive, negated atoms negative. */
Polarity polarity(const Formula &f);

/* True if `sub` occurs as a subformula of `f` (including `f` itself). */
bool is_subformula(const Formula &sub, const Formula &f);

} // namespace llwb

template <>
struct std::hash<llwb::Formula> {
	std::size_t operator()(const llwb::Formula &f) const noexcept { return f.hash(); }
};
