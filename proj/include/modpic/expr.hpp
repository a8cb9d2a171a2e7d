#pragma once

#include <string_view>

#include "modpic/divisor_class.hpp"
#include "modpic/readings.hpp"

namespace modpic {

// Evaluates a class expression.
//
//   expr    := term (('+' | '-') term)*
//   term    := '-' term | factor ('*' factor)*
//   factor  := number | '(' expr ')' | call | pullback '(' expr ')'
//   number  := digits ['/' digits]
//   call    := bn(g) | w(g) | w2 | epsilon(m,i) | theta(g,n,i,{S})
//            | lambda(g,n) | delta0(g,n) | omega(g,n,i) | psi(g,n,i) | delta(g,n,i,{S})
//   pullback:= pi<j>* | fprime* | gprime* | bubble(i,j)*
//
// fprime* yields the expanded class on M̄_{0,g+1}; results on genus 2 have
// λ eliminated by Mumford's relation.  Throws ParseError on bad syntax and
// the usual errors for invalid classes or space mismatches.
DivisorClass evaluate_expression(std::string_view text, const Readings& readings = {});

}  // namespace modpic
