#include "ctcsim/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ctcsim {

HilbertLayout::HilbertLayout(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
    if (subsystems_.empty()) {
        throw std::invalid_argument("layout needs at least one subsystem");
    }
    std::set<std::string> names;
    for (const auto& s : subsystems_) {
        if (s.name.empty()) {
            throw std::invalid_argument("subsystem name must be non-empty");
        }
        if (!names.insert(s.name).second) {
            throw std::invalid_argument("duplicate subsystem name: " + s.name);
        }
        if (s.dim < 2) {
            throw std::invalid_argument("subsystem '" + s.name + "' must have dim >= 2");
        }
        if (static_cast<int>(s.labels.size()) != s.dim) {
            throw std::invalid_argument("subsystem '" + s.name + "' needs exactly dim labels");
        }
        std::set<std::string> seen;
        for (const auto& l : s.labels) {
            if (l.empty()) {
                throw std::invalid_argument("subsystem '" + s.name + "' has an empty label");
            }
            if (!seen.insert(l).second) {
                throw std::invalid_argument("subsystem '" + s.name + "' repeats label '" + l + "'");
            }
        }
        if (dim_ > kMaxCompositeDim / s.dim) {
            throw std::invalid_argument("composite dimension exceeds cap of " +
                                        std::to_string(kMaxCompositeDim));
        }
        dim_ *= s.dim;
    }
    strides_.assign(subsystems_.size(), 1);
    for (int k = static_cast<int>(subsystems_.size()) - 2; k >= 0; --k) {
        strides_[k] = strides_[k + 1] * subsystems_[k + 1].dim;
    }
}

std::shared_ptr<const HilbertLayout> HilbertLayout::make(std::vector<Subsystem> subsystems) {
    return std::make_shared<const HilbertLayout>(std::move(subsystems));
}

std::shared_ptr<const HilbertLayout> HilbertLayout::single(std::string name,
                                                           std::vector<std::string> labels) {
    Subsystem s;
    s.name = std::move(name);
    s.dim = static_cast<int>(labels.size());
    s.labels = std::move(labels);
    return make({std::move(s)});
}

std::optional<int> HilbertLayout::index_of(std::string_view name) const {
    for (int k = 0; k < subsystem_count(); ++k) {
        if (subsystems_[k].name == name) return k;
    }
    return std::nullopt;
}

int HilbertLayout::pack(std::span<const int> digits) const {
    if (static_cast<int>(digits.size()) != subsystem_count()) {
        throw std::invalid_argument("pack: digit count does not match subsystem count");
    }
    int idx = 0;
    for (int k = 0; k < subsystem_count(); ++k) {
        if (digits[k] < 0 || digits[k] >= subsystems_[k].dim) {
            throw std::invalid_argument("pack: digit out of range for subsystem '" +
                                        subsystems_[k].name + "'");
        }
        idx += digits[k] * strides_[k];
    }
    return idx;
}

std::vector<int> HilbertLayout::unpack(int composite) const {
    if (composite < 0 || composite >= dim_) {
        throw std::invalid_argument("unpack: composite index out of range");
    }
    std::vector<int> digits(subsystem_count());
    for (int k = 0; k < subsystem_count(); ++k) {
        digits[k] = (composite / strides_[k]) % subsystems_[k].dim;
    }
    return digits;
}

int HilbertLayout::digit(int composite, int subsystem_index) const {
    return (composite / strides_.at(subsystem_index)) % subsystems_.at(subsystem_index).dim;
}

std::vector<std::string> HilbertLayout::labels_at(int composite) const {
    std::vector<std::string> out;
    out.reserve(subsystems_.size());
    for (int k = 0; k < subsystem_count(); ++k) {
        out.push_back(subsystems_[k].labels[digit(composite, k)]);
    }
    return out;
}

std::string HilbertLayout::basis_label(int composite, std::string_view sep) const {
    std::string out;
    for (int k = 0; k < subsystem_count(); ++k) {
        if (k > 0) out += sep;
        out += subsystems_[k].labels[digit(composite, k)];
    }
    return out;
}

std::shared_ptr<const HilbertLayout> HilbertLayout::sublayout(
    std::span<const std::string> names) const {
    std::vector<Subsystem> kept;
    for (const auto& s : subsystems_) {
        if (std::find(names.begin(), names.end(), s.name) != names.end()) {
            kept.push_back(s);
        }
    }
    if (kept.size() != names.size()) {
        throw std::invalid_argument("sublayout: unknown subsystem name");
    }
    return make(std::move(kept));
}

std::shared_ptr<const HilbertLayout> HilbertLayout::appended(Subsystem extra) const {
    std::vector<Subsystem> subs = subsystems_;
    subs.push_back(std::move(extra));
    return make(std::move(subs));
}

LayoutPtr concat(const HilbertLayout& a, const HilbertLayout& b) {
    std::vector<Subsystem> subs = a.subsystems();
    for (const auto& s : b.subsystems()) {
        if (a.has_subsystem(s.name)) {
            throw std::invalid_argument("tensor product: subsystem name collision: " + s.name);
        }
        subs.push_back(s);
    }
    return HilbertLayout::make(std::move(subs));
}

LayoutPtr numeric_layout(const std::vector<std::string>& names, int dim) {
    std::vector<std::string> labels(dim);
    for (int i = 0; i < dim; ++i) labels[i] = std::to_string(i);
    std::vector<Subsystem> subs;
    for (const auto& n : names) subs.push_back({n, dim, labels});
    return HilbertLayout::make(std::move(subs));
}

}  // namespace ctcsim
