/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "llwb/additive/additive.hpp"
#include "llwb/calculus/proof.hpp"
#include "llwb/calculus/prove.hpp"
#include "llwb/core/fragment.hpp"
#include "llwb/core/syntax.hpp"
#include "llwb/ell/ell.hpp"
#include "llwb/horn/horn.hpp"
#include "llwb/mall/fmall.hpp"
#include "llwb/mall/qbf.hpp"
#include "llwb/proofnet/proofnet.hpp"

namespace llwb::cli {

namespace {

using nlohmann::json;

/* Raised for well-formed input that the chosen options cannot handle. */
struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string input;
	std::string fragment = "auto";
	std::string mode;
	std::optional<std::size_t> depth;
	std::string emit;
	std::string format = "text";
};

std::string_view status_name(Verdict v)
{
	switch (v) {
	case Verdict::Provable: return "provable";
	case Verdict::NotProvable: return "not_provable";
	case Verdict::Unknown: return "unknown";
	}
	return "unknown";
}

std::optional<Verdict> status_from_name(std::string_view s)
{
	for (Verdict v : {Verdict::Provable, Verdict::NotProvable, Verdict::Unknown})
		if (status_name(v) == s)
			return v;
	return std::nullopt;
}

int exit_code(Verdict v)
{
	switch (v) {
	case Verdict::Provable: return Ok;
	case Verdict::NotProvable: return Negative;
	case Verdict::Unknown: return Unknown;
	}
	return Unknown;
}

std::string trim(std::string s)
{
	auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
	s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
	s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
	return s;
}

std::string read_all(std::istream &in)
{
	return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/* Positional text, or standard input when it is absent or "-". */
std::string input_text(const Options &o, std::istream &in)
{
	if (!o.input.empty() && o.input != "-")
		return o.input;
	return trim(read_all(in));
}

/* A file path, or standard input for "-" or no argument. */
std::string file_text(const Options &o, std::istream &in)
{
	if (o.input.empty() || o.input == "-")
		return read_all(in);
	std::ifstream f(o.input);
	if (!f)
		throw std::runtime_error("cannot open " + o.input);
	return read_all(f);
}

std::size_t depth_limit(const Options &o)
{
	if (o.depth)
		return *o.depth;
	if (const char *env = std::getenv("LLWB_DEPTH")) {
		char *end = nullptr;
		unsigned long v = std::strtoul(env, &end, 10);
		if (end && *end == '\0' && end != env)
			return v;
		throw UsageError("LLWB_DEPTH must be a non-negative integer");
	}
	return 0;
}

FocusMode focus_mode(const std::string &mode, FocusMode fallback)
{
	if (mode.empty())
		return fallback;
	if (mode == "multi")
		return FocusMode::Multi;
	if (mode == "focussed")
		return FocusMode::Focussed;
	if (mode == "cofocussed")
		return FocusMode::Cofocussed;
	if (mode == "bifocussed")
		return FocusMode::Bifocussed;
	throw UsageError("mode '" + mode + "' does not apply to MALL");
}

json stats_json(const SearchStats &s)
{
	return {{"nodes_expanded", s.nodes_expanded}, {"max_depth", s.max_depth}};
}

json grid_steps_json(const std::vector<GridStep> &steps)
{
	auto cell = [](std::size_t i) { return i == Grid::epsilon ? json(nullptr) : json(i); };
	auto link = [&](const Grid::Link &l) { return json::array({cell(l.first), cell(l.second)}); };
	json out = json::array();
	for (const auto &s : steps) {
		json prem = json::array();
		for (const auto &p : s.premises)
			prem.push_back(link(p));
		out.push_back({{"link", link(s.link)}, {"rule", to_string(s.rule)}, {"premises", prem}});
	}
	return out;
}

/* Indented text rendering of a proof tree, conclusion first. */
void print_tree(const ProofTree &t, std::ostream &out, std::size_t indent = 0)
{
	out << std::string(indent, ' ') << print(t.conclusion) << "   [" << to_string(t.rule) << "]\n";
	for (const auto &p : t.premises)
		print_tree(*p, out, indent + 2);
}

struct Outcome {
	Verdict verdict = Verdict::Unknown;
	json doc;
	std::string dot;
	std::string text_certificate;
};

Outcome with_proof(Outcome o, const SearchResult &r)
{
	o.verdict = r.verdict;
	o.doc["stats"] = stats_json(r.stats);
	if (r.proof) {
		o.doc["certificate"] = {{"kind", "proof_tree"}, {"data", proof_to_json(*r.proof)}};
		o.doc["certificate_checked"] = check_proof(*r.proof).ok;
		std::ostringstream s;
		print_tree(*r.proof, s);
		o.text_certificate = s.str();
	}
	return o;
}

Outcome run_calculus(const Sequent &s, const Options &o, Outcome base)
{
	base.doc["decider"] = "calculus";
	ProveOptions po;
	po.depth_limit = depth_limit(o);
	return with_proof(std::move(base), prove(s, po));
}

Outcome run_mll(const Sequent &s, const Options &o, Outcome base)
{
	MllResult r = decide_mll(s);
	if (r.routed) {
		base.doc["decider"] = "calculus";
		return with_proof(std::move(base), *r.routed);
	}
	base.doc["decider"] = "proofnet";
	base.verdict = r.verdict;
	base.doc["stats"] = {{"linkings_tried", r.linkings_tried}};
	if (r.net) {
		base.doc["certificate"] = {{"kind", "proof_net"}, {"data", net_to_json(*r.net)}};
		base.doc["certificate_checked"] = contract(*r.net).valid;
		if (o.emit == "dot")
			base.dot = net_to_dot(*r.net);
	}
	return base;
}

/* The grid handles A |- B with at most one formula a side. A one-sided
 * sequent |- A, B is read as A^ |- B. */
std::optional<TwoSidedSequent> as_grid_sequent(const TwoSidedSequent &ts, bool one_sided)
{
	if (!one_sided)
		return ts.antecedent.size() <= 1 && ts.succedent.size() <= 1 ? std::optional(ts) : std::nullopt;
	const auto &fs = ts.succedent;
	if (fs.size() == 1)
		return TwoSidedSequent{{}, {fs[0]}};
	if (fs.size() == 2)
		return TwoSidedSequent{{negate(fs[0])}, {fs[1]}};
	return std::nullopt;
}

Outcome run_additive(const TwoSidedSequent &ts, const Options &o, Outcome base)
{
	base.doc["decider"] = "additive";
	AllResult r = decide_all(ts);
	base.verdict = r.verdict;
	base.doc["stats"] = {{"inspections", r.stats.inspections}, {"passes", r.stats.passes}};
	std::optional<Formula> a, b;
	if (!ts.antecedent.empty())
		a = ts.antecedent[0];
	if (!ts.succedent.empty())
		b = ts.succedent[0];
	Grid g(a, b);
	if (r.verdict == Verdict::Provable) {
		base.doc["certificate"] = {{"kind", "grid_derivation"}, {"data", grid_steps_json(r.derivation)}};
		base.doc["certificate_checked"] = check_grid_derivation(g, r.derivation);
		std::ostringstream s;
		for (const auto &step : r.derivation) {
			auto name = [&](std::size_t i, const std::vector<Formula> &side) {
				return i == Grid::epsilon ? std::string("()") : print(side[i]);
			};
			s << name(step.link.first, g.rows()) << " -> " << name(step.link.second, g.cols()) << "   ["
			  << to_string(step.rule) << "]\n";
		}
		base.text_certificate = s.str();
	}
	if (o.emit == "dot") {
		for (std::size_t i = 0; i < g.rows().size(); ++i)
			for (std::size_t j = 0; j < g.cols().size(); ++j)
				if (g.rows()[i].is_atom() && g.rows()[i] == g.cols()[j])
					g.links.insert({i, j});
		base.dot = grid_to_dot(closure_sweep(g));
	}
	return base;
}

Outcome run_ell(const Sequent &s, const Options &o, Outcome base)
{
	EllMode mode = EllMode::Literal;
	if (o.mode == "extended")
		mode = EllMode::Extended;
	else if (!o.mode.empty() && o.mode != "literal")
		throw UsageError("mode '" + o.mode + "' does not apply to ELL");
	base.doc["decider"] = "ell";
	base.doc["mode"] = mode == EllMode::Literal ? "literal" : "extended";
	EllResult r = decide_ell(s, mode);
	base.verdict = r.verdict;
	base.doc["stats"] = {{"steps", r.steps}};
	return base;
}

Outcome run_fmall(const Sequent &s, const Options &o, Outcome base)
{
	base.doc["decider"] = "fmall";
	FmallOptions fo;
	fo.mode = focus_mode(o.mode, FocusMode::Bifocussed);
	FmallResult r = fmall_prove(s, fo);
	Outcome out = with_proof(std::move(base), r.search);
	out.doc["stats"]["alternations"] = r.alternations;
	return out;
}

Outcome run_horn(const std::string &text, const Options &o)
{
	HornSequent hs = parse_horn(text);
	HornMode mode = HornMode::Exact;
	if (o.mode == "weakening")
		mode = HornMode::Weakening;
	else if (!o.mode.empty() && o.mode != "exact")
		throw UsageError("mode '" + o.mode + "' does not apply to Horn sequents");
	Outcome out;
	out.doc = {{"sequent", print(hs)}, {"fragment", "horn"}, {"decider", "horn"},
	           {"mode", mode == HornMode::Exact ? "exact" : "weakening"}};
	HornResult r = decide_horn(hs, mode, depth_limit(o));
	out.verdict = r.verdict;
	out.doc["stats"] = stats_json(r.stats);
	if (r.program) {
		out.doc["certificate"] = {{"kind", "horn_program"}, {"data", program_to_json(*r.program)}};
		out.doc["certificate_checked"] = validate_program(*r.program, hs, mode);
	}
	return out;
}

std::optional<Fragment> forced_fragment(const std::string &name)
{
	if (name == "auto" || name == "horn")
		return std::nullopt;
	std::string upper = name;
	std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
	auto f = fragment_from_string(upper);
	if (!f || (*f != Fragment::MLL && *f != Fragment::ALL && *f != Fragment::ELL && *f != Fragment::MALL))
		throw UsageError("unknown fragment '" + name + "'");
	return f;
}

Outcome decide_text(const std::string &text, const Options &o)
{
	if (o.fragment == "horn" || (o.fragment == "auto" && looks_like_horn(text)))
		return run_horn(text, o);
	std::optional<Fragment> forced = forced_fragment(o.fragment);

	TwoSidedSequent ts = parse_sequent(text);
	bool one_sided = ts.antecedent.empty() && trim(text).starts_with("|-");
	Sequent s = normalize_two_sided(ts);
	Fragment actual = classify_fragment(s);
	Fragment target = forced.value_or(actual);
	if (forced && !leq(actual, *forced))
		throw FragmentError("sequent is " + std::string(to_string(actual)) + ", not " +
		                    std::string(to_string(*forced)));

	Outcome base;
	base.doc = {{"sequent", print(s)}, {"fragment", to_string(actual)}};
	switch (target) {
	case Fragment::MLL: return run_mll(s, o, std::move(base));
	case Fragment::ALL:
		if (auto g = as_grid_sequent(ts, one_sided))
			return run_additive(*g, o, std::move(base));
		if (forced)
			throw UsageError("the additive decider takes at most one formula on each side");
		return run_calculus(s, o, std::move(base));
	case Fragment::ELL: return run_ell(s, o, std::move(base));
	case Fragment::MALL: return run_fmall(s, o, std::move(base));
	default: return run_calculus(s, o, std::move(base));
	}
}

void emit(const Outcome &r, const Options &o, std::ostream &out)
{
	json doc = r.doc;
	doc["status"] = status_name(r.verdict);
	if (o.emit == "dot") {
		if (r.dot.empty())
			throw UsageError("--emit dot is available for proof nets and additive grids");
		out << r.dot;
		return;
	}
	if (o.format == "json") {
		out << doc.dump() << "\n";
		return;
	}
	out << status_name(r.verdict) << "\n";
	out << "decider: " << doc.value("decider", "") << "\n";
	if (!r.text_certificate.empty())
		out << r.text_certificate;
}

// ---- verbs ----------------------------------------------------------------

int cmd_parse(const Options &o, std::istream &in, std::ostream &out)
{
	std::string text = input_text(o, in);
	json doc;
	if (looks_like_horn(text)) {
		HornSequent hs = parse_horn(text);
		doc = {{"kind", "horn"}, {"sequent", print(hs)}};
	} else {
		TwoSidedSequent ts = parse_sequent(text);
		Sequent s = normalize_two_sided(ts);
		doc = {{"kind", "sequent"},
		       {"sequent", print(ts)},
		       {"one_sided", print(s)},
		       {"fragment", to_string(classify_fragment(s))}};
	}
	if (o.format == "json")
		out << doc.dump() << "\n";
	else
		for (const auto &[k, v] : doc.items())
			out << k << ": " << v.get<std::string>() << "\n";
	return Ok;
}

int cmd_decide(const Options &o, std::istream &in, std::ostream &out)
{
	Outcome r = decide_text(input_text(o, in), o);
	emit(r, o, out);
	return exit_code(r.verdict);
}

int cmd_prove(const Options &o, std::istream &in, std::ostream &out)
{
	std::string text = input_text(o, in);
	Sequent s = parse_one_sided(text);
	Outcome base;
	base.doc = {{"sequent", print(s)}, {"fragment", to_string(classify_fragment(s))}};
	Outcome r = run_calculus(s, o, std::move(base));
	r.doc["status"] = status_name(r.verdict);
	if (o.format == "json")
		out << r.doc.dump() << "\n";
	else {
		out << status_name(r.verdict) << "\n" << r.text_certificate;
	}
	return exit_code(r.verdict);
}

json parse_json(const std::string &text)
{
	try {
		return json::parse(text);
	} catch (const json::parse_error &e) {
		throw ParseError(e.what(), 1, e.byte);
	}
}

int cmd_check_proof(const Options &o, std::istream &in, std::ostream &out)
{
	json j = parse_json(file_text(o, in));
	/* Accept either a bare tree or a decide/prove verdict document. */
	if (j.contains("certificate"))
		j = j["certificate"]["data"];
	ProofPtr p = proof_from_json(j);
	CheckResult c = check_proof(*p);
	if (c.ok) {
		out << "valid: " << print(p->conclusion) << "\n";
		return Ok;
	}
	out << "invalid: " << c.diagnostic << "\n";
	return Negative;
}

int cmd_check_net(const Options &o, std::istream &in, std::ostream &out)
{
	json j = parse_json(file_text(o, in));
	if (j.contains("certificate"))
		j = j["certificate"]["data"];
	ProofNet net = net_from_json(j);
	ContractResult c = contract(net);
	if (o.emit == "dot") {
		out << net_to_dot(net);
		return c.valid ? Ok : Negative;
	}
	if (c.valid)
		out << "valid (" << c.steps << " contraction steps)\n";
	else
		out << "invalid: " << c.reason << "\n";
	return c.valid ? Ok : Negative;
}

/* "b m s1 ... sk" on one or two lines. */
std::string normalize_partition(const std::string &text)
{
	std::istringstream is(text);
	std::vector<std::string> tok{std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
	if (tok.size() < 2)
		return text;
	std::string out = tok[0] + " " + tok[1] + "\n";
	for (std::size_t i = 2; i < tok.size(); ++i)
		out += (i > 2 ? " " : "") + tok[i];
	return out;
}

int cmd_encode(const std::string &what, const Options &o, std::istream &in, std::ostream &out, std::ostream &err)
{
	std::string text = input_text(o, in);
	if (what == "qbf") {
		out << print(encode_qbf(parse_qbf(text))) << "\n";
	} else if (what == "3part") {
		PartitionInstance inst = parse_partition(normalize_partition(text));
		if (std::string w = partition_bound_warning(inst); !w.empty())
			err << "warning: " << w << "\n";
		out << print(encode_3partition(inst)) << "\n";
	} else {
		out << print(encode_task_sequent(parse_task(text))) << "\n";
	}
	return Ok;
}

int cmd_measure(const Options &o, std::istream &in, std::ostream &out)
{
	Sequent s = parse_one_sided(input_text(o, in));
	FocusMode mode = focus_mode(o.mode, FocusMode::Multi);
	std::size_t sigma_bound = fmall_sigma(s), pi_bound = fmall_pi(s);
	std::optional<std::size_t> sigma = fmall_min_sigma(s, mode), pi = fmall_min_pi(s, mode);
	auto opt = [](const std::optional<std::size_t> &v) { return v ? json(*v) : json(nullptr); };
	json doc = {{"sequent", print(s)},
	            {"provable", sigma.has_value()},
	            {"sigma_bound", sigma_bound},
	            {"pi_bound", pi_bound},
	            {"min_sigma", opt(sigma)},
	            {"min_pi", opt(pi)}};
	if (o.format == "json")
		out << doc.dump() << "\n";
	else
		for (const auto &[k, v] : doc.items())
			out << k << ": " << v.dump() << "\n";
	return sigma ? Ok : Negative;
}

/* Corpus lines: "<expected> <sequent>", blank lines and # comments skipped. */
int cmd_bench(const Options &o, std::istream &in, std::ostream &out, std::ostream &err)
{
	std::istringstream corpus(file_text(o, in));
	std::map<std::pair<std::string, std::string>, std::size_t> matrix;
	std::vector<double> times;
	std::size_t mismatches = 0, rows = 0, lineno = 0;
	json per_line = json::array();
	for (std::string line; std::getline(corpus, line);) {
		++lineno;
		line = trim(line);
		if (line.empty() || line.starts_with('#'))
			continue;
		auto sp = line.find_first_of(" \t");
		std::optional<Verdict> expected = status_from_name(line.substr(0, sp));
		if (!expected || sp == std::string::npos)
			throw ParseError("corpus line needs '<provable|not_provable|unknown> <sequent>'", lineno, 1);
		std::string seq = trim(line.substr(sp));
		auto t0 = std::chrono::steady_clock::now();
		Outcome r;
		try {
			r = decide_text(seq, o);
		} catch (const ParseError &e) {
			throw ParseError(e.what(), lineno, e.column());
		}
		double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
		times.push_back(ms);
		++rows;
		++matrix[{std::string(status_name(*expected)), std::string(status_name(r.verdict))}];
		if (r.verdict != *expected) {
			++mismatches;
			err << "line " << lineno << ": expected " << status_name(*expected) << ", got "
			    << status_name(r.verdict) << ": " << seq << "\n";
		}
		per_line.push_back({{"line", lineno}, {"expected", status_name(*expected)},
		                    {"actual", status_name(r.verdict)}, {"decider", r.doc.value("decider", "")},
		                    {"ms", ms}});
	}
	std::sort(times.begin(), times.end());
	auto pct = [&](double p) {
		if (times.empty())
			return 0.0;
		return times[std::min(times.size() - 1, static_cast<std::size_t>(p * (times.size() - 1) + 0.5))];
	};
	json m = json::array();
	for (const auto &[k, n] : matrix)
		m.push_back({{"expected", k.first}, {"actual", k.second}, {"count", n}});
	json doc = {{"rows", rows},
	            {"mismatches", mismatches},
	            {"matrix", m},
	            {"ms", {{"p50", pct(0.5)}, {"p90", pct(0.9)}, {"p99", pct(0.99)}, {"max", pct(1.0)}}}};
	if (o.format == "json") {
		doc["lines"] = per_line;
		out << doc.dump() << "\n";
	} else {
		out << "rows: " << rows << "\nmismatches: " << mismatches << "\n";
		for (const auto &[k, n] : matrix)
			out << "  expected " << k.first << " / got " << k.second << ": " << n << "\n";
		out << "ms p50 " << pct(0.5) << " p90 " << pct(0.9) << " p99 " << pct(0.99) << " max " << pct(1.0)
		    << "\n";
	}
	return mismatches ? Negative : Ok;
}

void add_common(CLI::App *c, Options &o, bool input_is_file = false)
{
	c->add_option("input", o.input, input_is_file ? "File to read, or - for stdin" : "Sequent text, or - for stdin");
	c->add_option("--fragment", o.fragment, "auto|mll|all|ell|mall|horn")
	        ->check(CLI::IsMember({"auto", "mll", "all", "ell", "mall", "horn"}));
	c->add_option("--mode", o.mode, "literal|extended|exact|weakening|multi|focussed|cofocussed|bifocussed")
	        ->check(CLI::IsMember(
	                {"literal", "extended", "exact", "weakening", "multi", "focussed", "cofocussed", "bifocussed"}));
	c->add_option("--depth", o.depth, "Search depth limit (overrides LLWB_DEPTH)");
	c->add_option("--emit", o.emit, "Render a graph instead of the verdict")->check(CLI::IsMember({"dot"}));
	c->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
	CLI::App app{"llwb: a linear-logic workbench", "llwb"};
	app.require_subcommand(1);
	Options o;

	auto *parse = app.add_subcommand("parse", "Parse a sequent and report its fragment");
	auto *decide = app.add_subcommand("decide", "Decide provability with the routed decider");
	auto *prove_cmd = app.add_subcommand("prove", "Search for a sequent-calculus proof");
	auto *check_proof_cmd = app.add_subcommand("check-proof", "Check a JSON proof tree");
	auto *check_net = app.add_subcommand("check-net", "Check a JSON proof net by contraction");
	auto *measure = app.add_subcommand("measure", "Focussing measures of a MALL sequent");
	auto *bench = app.add_subcommand("bench", "Run a corpus of '<expected> <sequent>' lines");
	for (auto *c : {parse, decide, prove_cmd, measure})
		add_common(c, o);
	for (auto *c : {check_proof_cmd, check_net, bench})
		add_common(c, o, true);

	auto *encode = app.add_subcommand("encode", "Reductions into linear logic");
	encode->require_subcommand(1);
	std::string encode_what;
	for (auto [name, help] : {std::pair{"qbf", "QBF to a MALL sequent"},
	                          std::pair{"3part", "3-Partition (b m s1..sk) to a Horn sequent"},
	                          std::pair{"task", "Intuitionistic task sequent to a Horn sequent"}}) {
		auto *sub = encode->add_subcommand(name, help);
		sub->add_option("input", o.input, "Instance text, or - for stdin");
		sub->callback([&encode_what, n = std::string(name)] { encode_what = n; });
	}

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try {
		app.parse(rev);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e, out, err);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e, out, err);
	} catch (const CLI::ParseError &e) {
		app.exit(e, out, err);
		return Usage;
	}

	try {
		if (parse->parsed())
			return cmd_parse(o, in, out);
		if (decide->parsed())
			return cmd_decide(o, in, out);
		if (prove_cmd->parsed())
			return cmd_prove(o, in, out);
		if (check_proof_cmd->parsed())
			return cmd_check_proof(o, in, out);
		if (check_net->parsed())
			return cmd_check_net(o, in, out);
		if (measure->parsed())
			return cmd_measure(o, in, out);
		if (bench->parsed())
			return cmd_bench(o, in, out, err);
		if (encode->parsed())
			return cmd_encode(encode_what, o, in, out, err);
	} catch (const ParseError &e) {
		err << "parse error: " << e.what() << "\n";
		return DataError;
	} catch (const UsageError &e) {
		err << "usage: " << e.what() << "\n";
		return Usage;
	} catch (const FragmentError &e) {
		err << "fragment: " << e.what() << "\n";
		return Usage;
	} catch (const std::invalid_argument &e) {
		err << "invalid input: " << e.what() << "\n";
		return DataError;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return DataError;
	}
	return Usage;
}

} // namespace llwb::cli
