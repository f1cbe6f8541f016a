#pragma once

#include <stdexcept>
#include <string>

namespace weavekit {

#define WEAVEKIT_DEFINE_ERROR(Name)                                      \
  class Name : public std::runtime_error {                               \
   public:                                                               \
    explicit Name(const std::string& what) : std::runtime_error(what) {} \
  }

WEAVEKIT_DEFINE_ERROR(DomainError);      // split time outside a path's domain
WEAVEKIT_DEFINE_ERROR(NotOnPath);        // graph point not on H(f)
WEAVEKIT_DEFINE_ERROR(OrderViolation);   // span endpoints out of graph order
WEAVEKIT_DEFINE_ERROR(GlueMismatch);     // concat endpoints disagree
WEAVEKIT_DEFINE_ERROR(CrossingAtSeam);   // concat pieces cross
WEAVEKIT_DEFINE_ERROR(ParamError);       // bad numeric parameter
WEAVEKIT_DEFINE_ERROR(EmptySet);         // metric over an empty collection
WEAVEKIT_DEFINE_ERROR(RamifiedSeed);     // seed point is ramified
WEAVEKIT_DEFINE_ERROR(CrossesWeave);     // path crosses the weave
WEAVEKIT_DEFINE_ERROR(SchemaError);      // malformed document
WEAVEKIT_DEFINE_ERROR(InvariantError);   // well-formed document, broken weave

#undef WEAVEKIT_DEFINE_ERROR

}  // namespace weavekit
