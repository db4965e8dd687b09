#pragma once

// JSON documents for every artifact. Each document carries "version": 1;
// rationals are written as "p/q" strings. Parse errors are Error(kParse)
// with the offending field path in the message.

#include <string>

#include "lstrat/fibers.hpp"
#include "lstrat/games.hpp"
#include "lstrat/quotient.hpp"
#include "lstrat/strata.hpp"

namespace lstrat::io {

inline constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Game: {version, rules:{dim, moves, functional?}, board:{ambient, defeated},
// endpoints?, check_threshold?}. "ambient" is a polyhedron
// {dim, constraints:[{normal, bound, rel}]} or the string "orthant".
LatticeGame parse_game(const std::string& text);
std::string write_game(const LatticeGame& g);

// {version, threshold, functional, positions} with positions in lex order.
PositionSet parse_positions(const std::string& text);
std::string write_positions(const PositionSet& s, const IntVec& functional);

// {version, window, radius, classes:[{rep, members_window, is_p}], table?,
// certified, stabilized, note, witness, generators, action, seeds, seed_class}.
MisereQuotient parse_quotient(const std::string& text);
std::string write_quotient(const MisereQuotient& q);

// {version, dim, form, disjoint, strata:[{translates, generators, normal}]}.
AffineStratification parse_stratification(const std::string& text);
std::string write_stratification(const AffineStratification& s);

// {version, size, table, identity}.
FiniteCommMonoid parse_monoid(const std::string& text);
std::string write_monoid(const FiniteCommMonoid& m);

// {version, n, images}; the target monoid comes from its own document.
MonoidMorphism parse_morphism(const std::string& text, const FiniteCommMonoid& target);
std::string write_morphism(const MonoidMorphism& phi);

// {version, dim, generators}.
std::vector<IntVec> parse_generators(const std::string& text, std::size_t* dim);
std::string write_generators(const std::vector<IntVec>& gens, std::size_t dim);

}  // namespace lstrat::io
