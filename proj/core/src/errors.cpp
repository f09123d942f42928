#include "hecke0/errors.hpp"

#include <utility>

namespace hecke0 {
namespace {

std::string join_witnesses(const std::string& head, const std::vector<std::string>& witnesses) {
    std::string message = head;
    for (const auto& w : witnesses) {
        message += "\n  ";
        message += w;
    }
    return message;
}

}  // namespace

RelationViolation::RelationViolation(std::vector<std::string> witnesses)
    : Error(join_witnesses("relation violated", witnesses)), witnesses_(std::move(witnesses)) {}

CaseViolation::CaseViolation(std::vector<std::string> witnesses)
    : Error(join_witnesses("column fits no deformation case", witnesses)),
      witnesses_(std::move(witnesses)) {}

}  // namespace hecke0
