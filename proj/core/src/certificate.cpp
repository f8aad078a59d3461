#include "combdeform/certificate.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace combdeform {
namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = k.size();
    for (auto v : k) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::string show(const std::vector<Label>& face) {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) out += (i ? "," : "") + face[i].str();
  return out + "}";
}

// Current complex during a replay: every present face with the number of
// present faces one dimension up that contain it.
class Replay {
 public:
  explicit Replay(const SimplicialComplex& k) {
    for (const auto& s : k.simplices()) insert(key_of(k.labels(s)));
  }

  std::optional<std::string> apply(const DeformationStep& step) {
    if (step.coface.size() != step.free_face.size() + 1 || step.free_face.empty())
      return "coface " + show(step.coface) + " does not cover free face " + show(step.free_face);
    const Key free = key_of(step.free_face);
    const Key coface = key_of(step.coface);
    if (!std::includes(coface.begin(), coface.end(), free.begin(), free.end()) || has_repeat(free) || has_repeat(coface))
      return "coface " + show(step.coface) + " does not cover free face " + show(step.free_face);
    if (step.kind == StepKind::collapse) {
      auto f = faces_.find(free);
      auto c = faces_.find(coface);
      if (f == faces_.end()) return "free face " + show(step.free_face) + " is not present";
      if (c == faces_.end()) return "coface " + show(step.coface) + " is not present";
      if (c->second != 0) return "coface " + show(step.coface) + " is not maximal";
      if (f->second != 1)
        return "free face " + show(step.free_face) + " has " + std::to_string(f->second) + " cofaces";
      erase(coface);
      erase(free);
      return std::nullopt;
    }
    if (faces_.count(free)) return "free face " + show(step.free_face) + " is already present";
    if (faces_.count(coface)) return "coface " + show(step.coface) + " is already present";
    Key facet;
    if (free.size() > 1)
      for (std::size_t drop = 0; drop < free.size(); ++drop)
        if (!faces_.count(without(free, drop, facet))) return "a facet of " + show(step.free_face) + " is missing";
    for (std::size_t drop = 0; drop < coface.size(); ++drop) {
      without(coface, drop, facet);
      if (facet != free && !faces_.count(facet)) return "a facet of " + show(step.coface) + " is missing";
    }
    insert(free);
    insert(coface);
    return std::nullopt;
  }

  SimplicialComplex complex() const {
    std::vector<Label> verts;
    std::unordered_map<std::uint32_t, VertexIndex> local;
    std::vector<Simplex> simplices;
    simplices.reserve(faces_.size());
    for (const auto& [k, count] : faces_) {
      Simplex s;
      for (auto id : k) {
        auto [it, inserted] = local.try_emplace(id, static_cast<VertexIndex>(verts.size()));
        if (inserted) verts.push_back(labels_[id]);
        s.push_back(it->second);
      }
      simplices.push_back(std::move(s));
    }
    return SimplicialComplex::from_family(std::move(verts), std::move(simplices));
  }

 private:
  Key key_of(const std::vector<Label>& face) {
    Key k;
    k.reserve(face.size());
    for (const auto& l : face) {
      auto [it, inserted] = ids_.try_emplace(l, static_cast<std::uint32_t>(labels_.size()));
      if (inserted) labels_.push_back(l);
      k.push_back(it->second);
    }
    std::sort(k.begin(), k.end());
    return k;
  }

  static bool has_repeat(const Key& k) { return std::adjacent_find(k.begin(), k.end()) != k.end(); }

  static const Key& without(const Key& k, std::size_t drop, Key& out) {
    out.assign(k.begin(), k.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(drop));
    return out;
  }

  void insert(const Key& k) {
    faces_.emplace(k, 0);
    if (k.size() < 2) return;
    Key facet;
    for (std::size_t drop = 0; drop < k.size(); ++drop) ++faces_[without(k, drop, facet)];
  }

  void erase(const Key& k) {
    faces_.erase(k);
    if (k.size() < 2) return;
    Key facet;
    for (std::size_t drop = 0; drop < k.size(); ++drop) {
      auto it = faces_.find(without(k, drop, facet));
      if (it != faces_.end()) --it->second;
    }
  }

  std::unordered_map<Label, std::uint32_t, LabelHash> ids_;
  std::vector<Label> labels_;
  std::unordered_map<Key, std::size_t, KeyHash> faces_;
};

}  // namespace

DeformationCertificate::DeformationCertificate(SimplicialComplex start, std::vector<DeformationStep> steps,
                                               SimplicialComplex end)
    : start_(std::move(start)), steps_(std::move(steps)), end_(std::move(end)) {}

DeformationCertificate DeformationCertificate::identity(const SimplicialComplex& k) {
  return DeformationCertificate(k, {}, k);
}

std::size_t DeformationCertificate::collapse_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(steps_.begin(), steps_.end(), [](const auto& s) { return s.kind == StepKind::collapse; }));
}

std::size_t DeformationCertificate::expansion_count() const noexcept { return steps_.size() - collapse_count(); }

DeformationCertificate DeformationCertificate::reversed() const {
  std::vector<DeformationStep> steps(steps_.rbegin(), steps_.rend());
  for (auto& s : steps) s.kind = s.kind == StepKind::collapse ? StepKind::expand : StepKind::collapse;
  return DeformationCertificate(end_, std::move(steps), start_);
}

DeformationCertificate DeformationCertificate::then(const DeformationCertificate& next) const {
  if (!(end_ == next.start_)) throw JunctionError("certificates do not meet: end complex differs from next start");
  std::vector<DeformationStep> steps = steps_;
  steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
  return DeformationCertificate(start_, std::move(steps), next.end_);
}

DeformationCertificate DeformationCertificate::relabeled(const std::function<Label(const Label&)>& rename) const {
  std::unordered_map<Label, Label, LabelHash> image;
  std::unordered_set<Label, LabelHash> targets;
  auto map = [&](const Label& l) -> const Label& {
    auto it = image.find(l);
    if (it != image.end()) return it->second;
    Label t = rename(l);
    if (!targets.insert(t).second) throw InputError("relabeling is not injective at " + t.str());
    return image.emplace(l, std::move(t)).first->second;
  };
  for (const auto& l : start_.vertices()) map(l);
  for (const auto& l : end_.vertices()) map(l);
  std::vector<DeformationStep> steps = steps_;
  for (auto& s : steps) {
    for (auto& l : s.free_face) l = map(l);
    for (auto& l : s.coface) l = map(l);
    std::sort(s.free_face.begin(), s.free_face.end());
    std::sort(s.coface.begin(), s.coface.end());
  }
  auto rn = [&](const Label& l) { return image.at(l); };
  return DeformationCertificate(start_.relabeled(rn), std::move(steps), end_.relabeled(rn));
}

VerifyReport verify_certificate(const DeformationCertificate& cert) {
  VerifyReport r;
  Replay replay(cert.start());
  for (std::size_t i = 0; i < cert.steps().size(); ++i) {
    if (auto err = replay.apply(cert.steps()[i])) {
      r.ok = false;
      r.failed_step = i;
      r.reason = (cert.steps()[i].kind == StepKind::collapse ? "collapse: " : "expansion: ") + *err;
      return r;
    }
  }
  if (!(replay.complex() == cert.end())) {
    r.ok = false;
    r.failed_step = cert.steps().size();
    r.reason = "end complex mismatch";
  }
  return r;
}

SimplicialComplex replay_prefix(const DeformationCertificate& cert, std::size_t count) {
  Replay replay(cert.start());
  for (std::size_t i = 0; i < count && i < cert.steps().size(); ++i)
    if (auto err = replay.apply(cert.steps()[i])) throw InputError("step " + std::to_string(i) + ": " + *err);
  return replay.complex();
}

}  // namespace combdeform
