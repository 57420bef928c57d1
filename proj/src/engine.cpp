#include "move/engine.hpp"

namespace move {

std::string to_string(JumpPolicy policy) {
    switch (policy) {
        case JumpPolicy::None: return "none";
        case JumpPolicy::One: return "one";
        case JumpPolicy::Unlimited: return "unlimited";
    }
    return "unlimited";
}

JumpPolicy jump_policy_from_string(const std::string& name) {
    if (name == "none") return JumpPolicy::None;
    if (name == "one") return JumpPolicy::One;
    if (name == "unlimited") return JumpPolicy::Unlimited;
    throw std::invalid_argument("unknown jump policy: " + name);
}

}  // namespace move
