#ifndef SUNFLOWER_IO_HPP
#define SUNFLOWER_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "sunflower/cohen.hpp"
#include "sunflower/delta.hpp"
#include "sunflower/generators.hpp"

namespace sunflower {

// Line-oriented JSON record formats. Every writer emits the exact bytes the
// corresponding reader accepts, so write-then-read is the identity and
// read-then-write reproduces the file.
//
//   family:     {"ground":[...],"n":n}           then {"index":[...],"set":[...]}
//   coloring:   {"color":k,"index":[...]} records only
//   polarized:  {"color":k,"tuple":[...]} records only
//   conditions: {"ground":[...],"n":n}           then {"cond":[[coord,bit],...],"index":[...]}
//   witness:    {"rho":r}                        then {"m":[...],"positions":[...]}
//   roots:      {"n":n}                          then {"index":[...],"m":[...],"root":[...]}
//   extension:  {"ground":[...],"n":n}           then {"index":[...],"set":[...]} for |index| <= n

std::string write_family(const Family& f);
Family read_family(std::istream& in);
Family read_family_file(const std::string& path);

std::string write_coloring(const ColorMap& c);
ColorMap read_coloring(std::istream& in);
ColorMap read_coloring_file(const std::string& path);

std::string write_tuple_coloring(const TupleColoring& c);
TupleColoring read_tuple_coloring(std::istream& in);
TupleColoring read_tuple_coloring_file(const std::string& path);

std::string write_condition_family(const ConditionFamily& cf);
ConditionFamily read_condition_family(std::istream& in);
ConditionFamily read_condition_family_file(const std::string& path);

std::string write_witness(const UniformWitness& w);
UniformWitness read_witness(std::istream& in);
UniformWitness read_witness_file(const std::string& path);

std::string write_roots(const RootSystem& rs);
RootSystem read_roots(std::istream& in);
RootSystem read_roots_file(const std::string& path);

std::string write_extension(std::uint32_t n, const OrdSet& ground,
                            const std::map<OrdSet, OrdSet>& ext);
std::map<OrdSet, OrdSet> read_extension(std::istream& in);
std::map<OrdSet, OrdSet> read_extension_file(const std::string& path);

} // namespace sunflower

#endif
