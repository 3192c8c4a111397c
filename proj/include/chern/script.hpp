#ifndef CHERN_SCRIPT_HPP
#define CHERN_SCRIPT_HPP

#include <string>
#include <vector>

#include "chern/graded.hpp"
#include "chern/lab.hpp"

namespace chern {

// Statements of the input language, fully resolved at parse time (names
// checked, polynomials bound to their ring's variables). Grammar:
//
//   ring S = char 32003, vars x y;
//   ideal I = x^2, y^3;                  (or intersect/sum/product/colon/
//   ideal L = intersect(P1, P2);          saturate(A, B), power(A, n))
//   quotient R = S / L;
//   module M = [x, 0], [0, y];
//   task coeffs R J nmax=12;
//
// Statements end with ';', comments run from '#' to end of line.
struct Script {
  enum class Kind { Ring, Quotient, IdealDecl, Module, Task };

  struct Stmt {
    Kind kind;
    std::string name;
    // Ring / Quotient
    RingPtr ring;
    std::string base, divisor;
    // IdealDecl
    std::string ring_name;
    std::vector<Polynomial> polys;
    // Module
    int rank = 0;
    std::vector<std::vector<Polynomial>> vectors;
    // Task
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::string>> kwargs;
    int line = 0, col = 0;
  };

  std::vector<Stmt> stmts;

  friend bool operator==(const Script& a, const Script& b);
};

// Errors carry "line:col: message" and the expected-token set.
Script parse_script(const std::string& text);

std::string print_script(const Script& s);

// Execute every task statement; declaration statements only bind names.
std::vector<ExperimentReport> run_script(const Script& s, const LabConfig& cfg);

}  // namespace chern

#endif
