#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace primas {

using VarId = std::uint32_t;

// Process-wide interner for variables. A variable is a (name, index) pair;
// index -1 means a plain name like "x", index >= 0 a family member like
// "x_3". Keeping indices symbolic lets schematic families X_1, X_2, ...
// exist without ever fixing an ambient variable count.
//
// The pool is append-only and safe for concurrent interning.
namespace vars {

VarId intern(std::string_view name, int index = -1);
const std::string& name(VarId v);
int index(VarId v);
std::string display(VarId v);

// Total order on variables: by name, then by index ("x" before "x_1"
// before "x_2" before "y"). Rank-smaller variables are the *greater*
// variables of every term order.
bool rank_less(VarId a, VarId b);
int rank_cmp(VarId a, VarId b);

}  // namespace vars
}  // namespace primas
