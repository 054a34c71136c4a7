#pragma once

#include <string>
#include <vector>

namespace leavitt {

// One family of indecomposable injective left modules, named on both sides
// of the generator correspondence X <-> c* + d*, Y <-> c + d.
struct ModuleDescriptor {
    std::string key;        // name used by the command line tools
    std::string left_side;  // description over the graph presentation
    std::string right_side; // description over the two-generator presentation
    std::string parameters;
};

const std::vector<ModuleDescriptor>& module_catalog();

}  // namespace leavitt
