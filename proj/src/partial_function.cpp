#include "pfa/partial_function.hpp"

#include <algorithm>
#include <unordered_set>

#include "pfa/errors.hpp"

namespace pfa {

Base::Base(std::vector<std::string> points) {
    std::unordered_set<std::string> seen;
    for (const auto& p : points) {
        if (p.empty()) throw ParseError("base: empty point name");
        if (!seen.insert(p).second) throw ParseError("base: duplicate point '" + p + "'");
    }
    points_ = std::make_shared<const std::vector<std::string>>(std::move(points));
}

int Base::index_of(const std::string& name) const {
    for (size_t i = 0; i < points_->size(); ++i)
        if ((*points_)[i] == name) return static_cast<int>(i);
    return -1;
}

PartialFunction::PartialFunction(Base base)
    : base_(std::move(base)), image_(static_cast<size_t>(base_.size()), kUndefined) {}

PartialFunction::PartialFunction(Base base, std::vector<int32_t> image)
    : base_(std::move(base)), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != base_.size())
        throw Error("partial function: image size does not match base");
    for (int32_t v : image_)
        if (v != kUndefined && (v < 0 || v >= base_.size()))
            throw Error("partial function: image point out of range");
}

PartialFunction PartialFunction::identity(const Base& base) {
    std::vector<int32_t> im(static_cast<size_t>(base.size()));
    for (int i = 0; i < base.size(); ++i) im[static_cast<size_t>(i)] = i;
    return PartialFunction(base, std::move(im));
}

PartialFunction PartialFunction::from_pairs(
    const Base& base, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<int32_t> im(static_cast<size_t>(base.size()), kUndefined);
    for (const auto& [from, to] : pairs) {
        int x = base.index_of(from);
        int y = base.index_of(to);
        if (x < 0) throw ParseError("unknown point '" + from + "'");
        if (y < 0) throw ParseError("unknown point '" + to + "'");
        if (im[static_cast<size_t>(x)] != kUndefined && im[static_cast<size_t>(x)] != y)
            throw ParseError("not a function: two images for point '" + from + "'");
        im[static_cast<size_t>(x)] = y;
    }
    return PartialFunction(base, std::move(im));
}

bool PartialFunction::is_empty() const {
    return std::all_of(image_.begin(), image_.end(),
                       [](int32_t v) { return v == kUndefined; });
}

int PartialFunction::graph_size() const {
    int n = 0;
    for (int32_t v : image_) n += (v != kUndefined);
    return n;
}

std::vector<std::pair<int, int>> PartialFunction::graph() const {
    std::vector<std::pair<int, int>> g;
    for (int x = 0; x < base_.size(); ++x)
        if (image_[static_cast<size_t>(x)] != kUndefined) g.emplace_back(x, image_[static_cast<size_t>(x)]);
    return g;
}

std::vector<std::pair<std::string, std::string>> PartialFunction::named_graph() const {
    std::vector<std::pair<std::string, std::string>> g;
    for (auto [x, y] : graph()) g.emplace_back(base_.name(x), base_.name(y));
    return g;
}

bool PartialFunction::subfunction_of(const PartialFunction& g) const {
    if (base_ != g.base_) throw BaseMismatch("subfunction_of: different bases");
    for (size_t x = 0; x < image_.size(); ++x)
        if (image_[x] != kUndefined && image_[x] != g.image_[x]) return false;
    return true;
}

bool PartialFunction::is_subidentity() const {
    for (size_t x = 0; x < image_.size(); ++x)
        if (image_[x] != kUndefined && image_[x] != static_cast<int32_t>(x)) return false;
    return true;
}

namespace {
void require_same_base(const PartialFunction& f, const PartialFunction& g, const char* op) {
    if (f.base() != g.base()) throw BaseMismatch(std::string(op) + ": different bases");
}
} // namespace

PartialFunction compose(const PartialFunction& f, const PartialFunction& g) {
    require_same_base(f, g, "compose");
    std::vector<int32_t> im(f.image().size(), PartialFunction::kUndefined);
    for (size_t x = 0; x < im.size(); ++x) {
        int32_t y = f.image()[x];
        if (y != PartialFunction::kUndefined) im[x] = g.image()[static_cast<size_t>(y)];
    }
    return PartialFunction(f.base(), std::move(im));
}

PartialFunction intersect(const PartialFunction& f, const PartialFunction& g) {
    require_same_base(f, g, "intersect");
    std::vector<int32_t> im(f.image().size(), PartialFunction::kUndefined);
    for (size_t x = 0; x < im.size(); ++x)
        if (f.image()[x] == g.image()[x]) im[x] = f.image()[x];
    return PartialFunction(f.base(), std::move(im));
}

PartialFunction antidomain(const PartialFunction& f) {
    std::vector<int32_t> im(f.image().size(), PartialFunction::kUndefined);
    for (size_t x = 0; x < im.size(); ++x)
        if (f.image()[x] == PartialFunction::kUndefined) im[x] = static_cast<int32_t>(x);
    return PartialFunction(f.base(), std::move(im));
}

PartialFunction domain_diag(const PartialFunction& f) {
    std::vector<int32_t> im(f.image().size(), PartialFunction::kUndefined);
    for (size_t x = 0; x < im.size(); ++x)
        if (f.image()[x] != PartialFunction::kUndefined) im[x] = static_cast<int32_t>(x);
    return PartialFunction(f.base(), std::move(im));
}

PartialFunction range_diag(const PartialFunction& f) {
    std::vector<int32_t> im(f.image().size(), PartialFunction::kUndefined);
    for (int32_t y : f.image())
        if (y != PartialFunction::kUndefined) im[static_cast<size_t>(y)] = y;
    return PartialFunction(f.base(), std::move(im));
}

PartialFunction identity(const Base& base) { return PartialFunction::identity(base); }

PartialFunction empty_function(const Base& base) { return PartialFunction::empty(base); }

size_t PfunHash::operator()(const PartialFunction& f) const {
    // FNV-1a over the image vector.
    uint64_t h = 1469598103934665603ull;
    for (int32_t v : f.image()) {
        h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

} // namespace pfa
