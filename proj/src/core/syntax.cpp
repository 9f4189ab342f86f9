/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/core/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace llwb {

ParseError::ParseError(const std::string &msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

namespace {

enum class Tok {
	Ident,
	One,
	Zero,
	Top,
	Bot,
	Caret,
	Bang,
	Quest,
	Star,
	Amp,
	Plus,
	Bar,
	Lolli,
	AddImp,
	LParen,
	RParen,
	Comma,
	Turnstile,
	End,
};

struct Token {
	Tok kind;
	std::string text;
	std::size_t line, col;
};

std::vector<Token> lex(std::string_view s)
{
	std::vector<Token> out;
	std::size_t line = 1, col = 1, i = 0;
	auto advance = [&](std::size_t n) {
		for (std::size_t k = 0; k < n; ++k) {
			if (s[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
			++i;
		}
	};
	while (i < s.size()) {
		char c = s[i];
		if (std::isspace(static_cast<unsigned char>(c))) {
			advance(1);
			continue;
		}
		std::size_t l = line, cc = col;
		auto two = [&](char a, char b) { return c == a && i + 1 < s.size() && s[i + 1] == b; };
		if (c >= 'a' && c <= 'z') {
			std::size_t j = i;
			while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
			                        std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_'))
				++j;
			std::string word(s.substr(i, j - i));
			Tok k = word == "top" ? Tok::Top : word == "bot" ? Tok::Bot : Tok::Ident;
			out.push_back({k, word, l, cc});
			advance(j - i);
			continue;
		}
		if (two('|', '-')) {
			out.push_back({Tok::Turnstile, "|-", l, cc});
			advance(2);
			continue;
		}
		if (two('-', 'o')) {
			out.push_back({Tok::Lolli, "-o", l, cc});
			advance(2);
			continue;
		}
		if (two('+', '>')) {
			out.push_back({Tok::AddImp, "+>", l, cc});
			advance(2);
			continue;
		}
		Tok k;
		switch (c) {
		case '1': k = Tok::One; break;
		case '0': k = Tok::Zero; break;
		case '^': k = Tok::Caret; break;
		case '!': k = Tok::Bang; break;
		case '?': k = Tok::Quest; break;
		case '*': k = Tok::Star; break;
		case '&': k = Tok::Amp; break;
		case '+': k = Tok::Plus; break;
		case '|': k = Tok::Bar; break;
		case '(': k = Tok::LParen; break;
		case ')': k = Tok::RParen; break;
		case ',': k = Tok::Comma; break;
		default:
			throw ParseError(std::string("unknown token '") + c + "'", l, cc);
		}
		out.push_back({k, std::string(1, c), l, cc});
		advance(1);
	}
	out.push_back({Tok::End, "", line, col});
	return out;
}

class Parser {
public:
	explicit Parser(std::string_view text) : toks_(lex(text)) {}

	Formula formula() { return implication(); }

	std::vector<Formula> formula_list()
	{
		std::vector<Formula> out;
		if (!starts_formula())
			return out;
		out.push_back(formula());
		while (peek().kind == Tok::Comma) {
			next();
			out.push_back(formula());
		}
		return out;
	}

	const Token &peek() const { return toks_[pos_]; }
	const Token &next() { return toks_[pos_++]; }

	void expect(Tok k, const char *what)
	{
		if (peek().kind != k)
			fail(std::string("expected ") + what);
		next();
	}

	[[noreturn]] void fail(const std::string &msg) const
	{
		const auto &t = peek();
		std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
		throw ParseError(msg + ", got " + got, t.line, t.col);
	}

private:
	bool starts_formula() const
	{
		switch (peek().kind) {
		case Tok::Ident:
		case Tok::One:
		case Tok::Zero:
		case Tok::Top:
		case Tok::Bot:
		case Tok::Bang:
		case Tok::Quest:
		case Tok::LParen:
			return true;
		default:
			return false;
		}
	}

	Formula implication()
	{
		Formula lhs = additive_level();
		Tok k = peek().kind;
		if (k != Tok::Lolli && k != Tok::AddImp)
			return lhs;
		next();
		Formula rhs = implication();
		return desugar_implication(k == Tok::Lolli ? ImplicationKind::Multiplicative : ImplicationKind::Additive,
		                           lhs, rhs);
	}

	/* One precedence level with two left-associative connectives that may
	 * not be mixed without parentheses. */
	template <typename Sub>
	Formula level(Tok t1, Connective c1, Tok t2, Connective c2, Sub sub)
	{
		Formula acc = (this->*sub)();
		std::optional<Tok> seen;
		while (peek().kind == t1 || peek().kind == t2) {
			Tok k = peek().kind;
			if (seen && *seen != k)
				fail("mixing operators of equal precedence requires parentheses");
			seen = k;
			next();
			Formula rhs = (this->*sub)();
			acc = Formula::binary(k == t1 ? c1 : c2, acc, rhs);
		}
		return acc;
	}

	Formula additive_level()
	{
		return level(Tok::Plus, Connective::Plus, Tok::Bar, Connective::Par, &Parser::multiplicative_level);
	}

	Formula multiplicative_level()
	{
		return level(Tok::Star, Connective::Tensor, Tok::Amp, Connective::With, &Parser::prefix);
	}

	Formula prefix()
	{
		if (peek().kind == Tok::Bang) {
			next();
			return ofcourse(prefix());
		}
		if (peek().kind == Tok::Quest) {
			next();
			return whynot(prefix());
		}
		return postfix();
	}

	Formula postfix()
	{
		Formula f = primary();
		while (peek().kind == Tok::Caret) {
			next();
			f = negate(f);
		}
		return f;
	}

	Formula primary()
	{
		const Token &t = peek();
		switch (t.kind) {
		case Tok::Ident:
			next();
			return Formula::atom(t.text);
		case Tok::One:
			next();
			return Formula::one();
		case Tok::Zero:
			next();
			return Formula::zero();
		case Tok::Top:
			next();
			return Formula::top();
		case Tok::Bot:
			next();
			return Formula::bot();
		case Tok::LParen: {
			next();
			Formula f = formula();
			expect(Tok::RParen, "')'");
			return f;
		}
		default:
			fail("expected a formula");
		}
	}

	std::vector<Token> toks_;
	std::size_t pos_ = 0;
};

/* Binding strength used by the printer: 2 for * and &, 1 for + and |,
 * 3 for anything that never needs parentheses. */
int strength(const Formula &f)
{
	if (!f.is_binary())
		return 3;
	return f.is(Connective::Tensor) || f.is(Connective::With) ? 2 : 1;
}

const char *symbol(Connective c)
{
	switch (c) {
	case Connective::Tensor: return " * ";
	case Connective::Par: return " | ";
	case Connective::Plus: return " + ";
	case Connective::With: return " & ";
	}
	return " ? ";
}

void emit(const Formula &f, std::string &out);

void emit_child(const Formula &child, const Formula &parent, bool is_left, std::string &out)
{
	bool bare = strength(child) > strength(parent) ||
	            (is_left && child.is_binary() && child.connective() == parent.connective());
	if (bare) {
		emit(child, out);
	} else {
		out += '(';
		emit(child, out);
		out += ')';
	}
}

void emit(const Formula &f, std::string &out)
{
	switch (f.kind()) {
	case Formula::Kind::Atom:
		out += f.name();
		if (f.negated())
			out += '^';
		return;
	case Formula::Kind::Unit:
		switch (f.unit_kind()) {
		case UnitKind::One: out += '1'; break;
		case UnitKind::Zero: out += '0'; break;
		case UnitKind::Top: out += "top"; break;
		case UnitKind::Bot: out += "bot"; break;
		}
		return;
	case Formula::Kind::Modal:
		out += f.is(Modality::OfCourse) ? '!' : '?';
		if (f.body().is_binary()) {
			out += '(';
			emit(f.body(), out);
			out += ')';
		} else {
			emit(f.body(), out);
		}
		return;
	case Formula::Kind::Binary:
		emit_child(f.left(), f, true, out);
		out += symbol(f.connective());
		emit_child(f.right(), f, false, out);
		return;
	}
}

std::string join_formulas(const std::vector<Formula> &fs)
{
	std::string out;
	for (std::size_t i = 0; i < fs.size(); ++i) {
		if (i)
			out += ", ";
		emit(fs[i], out);
	}
	return out;
}

} // namespace

Formula parse_formula(std::string_view text)
{
	Parser p(text);
	Formula f = p.formula();
	if (p.peek().kind != Tok::End)
		p.fail("unexpected trailing input");
	return f;
}

TwoSidedSequent parse_sequent(std::string_view text)
{
	Parser p(text);
	TwoSidedSequent s;
	s.antecedent = p.formula_list();
	p.expect(Tok::Turnstile, "'|-'");
	s.succedent = p.formula_list();
	if (p.peek().kind != Tok::End)
		p.fail(s.succedent.empty() ? "expected a formula or end of input" : "expected ',' or end of input");
	return s;
}

Sequent parse_one_sided(std::string_view text) { return normalize_two_sided(parse_sequent(text)); }

std::string print(const Formula &f)
{
	std::string out;
	emit(f, out);
	return out;
}

std::string print(const Sequent &s)
{
	std::string body = join_formulas(s.formulas());
	return body.empty() ? "|-" : "|- " + body;
}

std::string print(const TwoSidedSequent &s)
{
	std::string lhs = join_formulas(s.antecedent);
	std::string rhs = join_formulas(s.succedent);
	std::string out = lhs.empty() ? "|-" : lhs + " |-";
	if (!rhs.empty())
		out += " " + rhs;
	return out;
}

} // namespace llwb
