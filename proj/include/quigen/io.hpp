#pragma once

#include <string>

#include "quigen/rep.hpp"

namespace quigen {

// text formats are documented in docs/formats.md

AlgebraSpec parse_algebra_text(const std::string& text, const std::string& label);
AlgebraPtr load_algebra_file(const std::string& path);

RepPtr parse_module_text(const std::string& text, AlgebraPtr alg);
RepPtr load_module_file(const std::string& path, AlgebraPtr alg);
std::string module_to_text(const Representation& M);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace quigen
