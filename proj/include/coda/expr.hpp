#pragma once

/**
 * @file expr.hpp
 * @brief Text grammar for cochains, coderivations, scalars and
 *        automorphisms: terms phi[i1,i2,i3;j] / psi[i1,i2,i3;j] with
 *        scalar coefficient factors, and lin(q; r,s,t,u)*exp(...) chains.
 *        render(parse(x)) is the identity on engine output.
 */

#include "coda/automorphism.hpp"
#include "coda/cochain.hpp"

#include <string>

namespace coda {

struct SyntaxError : std::runtime_error {
    size_t position;
    SyntaxError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

// Mixed-weight sums parse into a Coderivation; use the helpers below when
// a homogeneous cochain or a plain scalar is required.
Coderivation parse_coderivation(const std::string& text, int truncation = 12);
Cochain parse_cochain(const std::string& text);
Scalar parse_scalar(const std::string& text);
FormalAutomorphism parse_automorphism(const std::string& text, int truncation = 12);

std::string render(const Cochain& f);
std::string render(const Coderivation& d);
std::string render(const Scalar& s);
std::string render(const FormalAutomorphism& g);

}  // namespace coda
