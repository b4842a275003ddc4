#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pfa {

/// An ordered finite set of named points. Cheap to copy (shared immutable
/// storage); equality is by content. The empty base is allowed.
class Base {
  public:
    Base() : points_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Base(std::vector<std::string> points);

    int size() const { return static_cast<int>(points_->size()); }
    const std::string& name(int i) const { return (*points_)[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return *points_; }
    /// Index of a named point, or -1.
    int index_of(const std::string& name) const;

    friend bool operator==(const Base& a, const Base& b) {
        return a.points_ == b.points_ || *a.points_ == *b.points_;
    }
    friend bool operator!=(const Base& a, const Base& b) { return !(a == b); }

  private:
    std::shared_ptr<const std::vector<std::string>> points_;
};

/// A partial function on a finite base. The graph is stored as one image
/// slot per point (kUndefined where the function is not defined), which is
/// the canonical sorted-pair form: equality of graphs is equality of values.
class PartialFunction {
  public:
    static constexpr int32_t kUndefined = -1;

    PartialFunction() = default;
    /// The nowhere-defined function on `base`.
    explicit PartialFunction(Base base);
    PartialFunction(Base base, std::vector<int32_t> image);

    static PartialFunction empty(const Base& base) { return PartialFunction(base); }
    static PartialFunction identity(const Base& base);
    /// Builds from named pairs; rejects unknown points and non-functional graphs.
    static PartialFunction from_pairs(const Base& base,
                                      const std::vector<std::pair<std::string, std::string>>& pairs);

    const Base& base() const { return base_; }
    bool defined_at(int x) const { return image_[static_cast<size_t>(x)] != kUndefined; }
    int32_t at(int x) const { return image_[static_cast<size_t>(x)]; }
    const std::vector<int32_t>& image() const { return image_; }

    bool is_empty() const;
    /// Number of pairs in the graph.
    int graph_size() const;
    /// Graph as index pairs, sorted by first coordinate.
    std::vector<std::pair<int, int>> graph() const;
    /// Graph as named pairs.
    std::vector<std::pair<std::string, std::string>> named_graph() const;
    /// True iff every pair of this function is a pair of `g`.
    bool subfunction_of(const PartialFunction& g) const;
    /// True iff the graph is contained in the identity.
    bool is_subidentity() const;

    friend bool operator==(const PartialFunction& f, const PartialFunction& g) {
        return f.base_ == g.base_ && f.image_ == g.image_;
    }
    friend bool operator!=(const PartialFunction& f, const PartialFunction& g) { return !(f == g); }
    /// Lexicographic on the image vector; used for deterministic ordering.
    friend bool operator<(const PartialFunction& f, const PartialFunction& g) {
        return f.image_ < g.image_;
    }

  private:
    Base base_;
    std::vector<int32_t> image_;
};

// The seven set-theoretic operations on partial functions. All binary
// operations require a shared base and throw BaseMismatch otherwise.

/// Left-to-right composition: (f;g)(x) = g(f(x)).
PartialFunction compose(const PartialFunction& f, const PartialFunction& g);
/// Intersection of graphs.
PartialFunction intersect(const PartialFunction& f, const PartialFunction& g);
/// Identity on the points where f is undefined.
PartialFunction antidomain(const PartialFunction& f);
/// Identity on the points where f is defined.
PartialFunction domain_diag(const PartialFunction& f);
/// Identity on the image points of f.
PartialFunction range_diag(const PartialFunction& f);
PartialFunction identity(const Base& base);
PartialFunction empty_function(const Base& base);

struct PfunHash {
    size_t operator()(const PartialFunction& f) const;
};

} // namespace pfa
