/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace llwb::cli {

enum ExitCode : int {
	Ok = 0,
	Negative = 1, // not provable, or an invalid certificate
	Unknown = 2,
	Usage = 64,
	DataError = 65,
};

/* Runs one invocation. `args` excludes the program name. Text that a verb
 * would read from standard input comes from `in`. */
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace llwb::cli
