#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "codebetti/code.hpp"

namespace codebetti {

// The .code file format:
//   # comment                (anywhere; blank lines ignored)
//   q 3
//   kind generator           (or: kind parity)
//   1 0 1 2 0 1 2 0 1 2 0 1 2
//   ...                      (one matrix row per line)
struct CodeFile {
    enum class Kind { Generator, Parity };
    unsigned q = 0;
    Kind kind = Kind::Generator;
    std::vector<std::vector<unsigned>> rows;
};

CodeFile parse_code_file(const std::string& text);   // ParseError with line numbers
CodeFile load_code_file(const std::string& path);
std::string write_code_file(const CodeFile& f);
LinearCode build_code(const CodeFile& f);

// Entry point behind the `codebetti` binary; args excludes argv[0].
// Returns the process exit code: 0 success / all checks pass, 1 a verification
// or unanimity check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace codebetti
