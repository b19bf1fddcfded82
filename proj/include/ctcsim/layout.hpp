#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctcsim {

/// Default tolerance for numeric equality of states and operators.
inline constexpr double kDefaultTol = 1e-10;

/// Hard cap on composite dimension. Everything in this library is dense;
/// beyond this the matrices stop being "desk scale".
inline constexpr int kMaxCompositeDim = 4096;

struct Subsystem {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;  // one label per basis index

    bool operator==(const Subsystem&) const = default;
};

/// An ordered list of subsystems spanning a composite Hilbert space.
///
/// Composite indices are row-major with the leftmost subsystem most
/// significant, so |a⟩⊗|b⟩ on dims (da, db) sits at index a*db + b.
/// Immutable after construction; share via std::shared_ptr.
class HilbertLayout {
public:
    explicit HilbertLayout(std::vector<Subsystem> subsystems);

    static std::shared_ptr<const HilbertLayout> make(std::vector<Subsystem> subsystems);

    /// Single subsystem spanning the whole space.
    static std::shared_ptr<const HilbertLayout> single(std::string name,
                                                       std::vector<std::string> labels);

    int dim() const { return dim_; }
    int subsystem_count() const { return static_cast<int>(subsystems_.size()); }
    const Subsystem& subsystem(int k) const { return subsystems_.at(k); }
    const std::vector<Subsystem>& subsystems() const { return subsystems_; }

    std::optional<int> index_of(std::string_view name) const;
    bool has_subsystem(std::string_view name) const { return index_of(name).has_value(); }

    /// Composite index from per-subsystem digits.
    int pack(std::span<const int> digits) const;
    /// Per-subsystem digits of a composite index.
    std::vector<int> unpack(int composite) const;
    /// Digit of one subsystem within a composite index.
    int digit(int composite, int subsystem_index) const;

    /// Labels of every subsystem at a composite basis index.
    std::vector<std::string> labels_at(int composite) const;
    /// "empty,alive" style rendering of a composite basis index.
    std::string basis_label(int composite, std::string_view sep = ",") const;

    /// Layout of a subset of subsystems, kept in this layout's order.
    std::shared_ptr<const HilbertLayout> sublayout(std::span<const std::string> names) const;
    /// This layout with one more subsystem appended on the right.
    std::shared_ptr<const HilbertLayout> appended(Subsystem extra) const;

    bool operator==(const HilbertLayout& other) const { return subsystems_ == other.subsystems_; }

private:
    std::vector<Subsystem> subsystems_;
    std::vector<int> strides_;
    int dim_ = 1;
};

using LayoutPtr = std::shared_ptr<const HilbertLayout>;

/// Concatenation of two layouts (left factors stay most significant).
/// Throws std::invalid_argument on subsystem name collision.
LayoutPtr concat(const HilbertLayout& a, const HilbertLayout& b);

/// Layout with subsystems "0","1",...,"k-1"... named explicitly: a list of
/// qudit subsystems all of dimension `dim`, labels "0".."dim-1".
LayoutPtr numeric_layout(const std::vector<std::string>& names, int dim);

}  // namespace ctcsim
