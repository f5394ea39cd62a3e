#include "twoplanar/scorer.hpp"

#include <cmath>
#include <stdexcept>

namespace twoplanar {

Vocab::Vocab(bool with_specials) : specials_(with_specials) {
  if (with_specials)
    for (const char* s : {"<null>", "<unk>", "<root>"}) add(s);
}

int Vocab::add(const std::string& item) {
  auto [it, inserted] = index_.try_emplace(item, size());
  if (inserted) items_.push_back(item);
  return it->second;
}

int Vocab::id(const std::string& item) const {
  auto it = index_.find(item);
  if (it != index_.end()) return it->second;
  return specials_ ? kUnk : -1;
}

ActionSpace::ActionSpace(System system, int labels) : labels_(labels) {
  std::fill(std::begin(unlabeled_), std::end(unlabeled_), -1);
  auto add_plain = [&](Transition t) {
    unlabeled_[static_cast<int>(t.kind)] = size();
    actions_.push_back(t);
  };
  add_plain(shift());
  if (system == System::TwoPlanar) {
    add_plain(reduce());
    add_plain(switch_planes());
  } else {
    add_plain(swap());
  }
  base_ = size();
  for (int l = 0; l < labels; ++l) actions_.push_back(left_arc(l));
  for (int l = 0; l < labels; ++l) actions_.push_back(right_arc(l));
}

int ActionSpace::index(const Transition& t) const {
  if (!t.is_arc()) return unlabeled_[static_cast<int>(t.kind)];
  if (t.label < 0 || t.label >= labels_) return -1;
  return base_ + (t.kind == Kind::LeftArc ? 0 : labels_) + t.label;
}

namespace {

Eigen::MatrixXf uniform_matrix(int rows, int cols, float scale, Rng& rng) {
  Eigen::MatrixXf m(rows, cols);
  // column-major fill keeps the draw order independent of Eigen internals
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = static_cast<float>((2.0 * uniform_real(rng) - 1.0) * scale);
  return m;
}

float glorot(int fan_in, int fan_out) { return std::sqrt(6.0f / static_cast<float>(fan_in + fan_out)); }

}  // namespace

Scorer::Scorer(const Hyperparams& hp, int slots, int form_vocab, int pos_vocab, int actions, Rng& rng)
    : slots_(slots), rnn_dim_(hp.rnn_dim) {
  if (hp.form_dim <= 0 || hp.pos_dim <= 0 || hp.hidden <= 0 || hp.rnn_dim < 0)
    throw std::invalid_argument("Scorer: dimensions must be positive");
  const int tok = hp.form_dim + hp.pos_dim;
  tensors_.push_back({"form_emb", uniform_matrix(hp.form_dim, form_vocab, std::sqrt(3.0f / hp.form_dim), rng)});
  tensors_.push_back({"pos_emb", uniform_matrix(hp.pos_dim, pos_vocab, std::sqrt(3.0f / hp.pos_dim), rng)});
  const int in = slots * (rnn_dim_ > 0 ? 2 * rnn_dim_ : tok);
  tensors_.push_back({"hidden_w", uniform_matrix(hp.hidden, in, glorot(in, hp.hidden), rng)});
  tensors_.push_back({"hidden_b", Eigen::MatrixXf::Zero(hp.hidden, 1)});
  tensors_.push_back({"out_w", uniform_matrix(actions, hp.hidden, glorot(hp.hidden, actions), rng)});
  tensors_.push_back({"out_b", Eigen::MatrixXf::Zero(actions, 1)});
  if (rnn_dim_ > 0) {
    const int r = rnn_dim_;
    tensors_.push_back({"null_ctx", uniform_matrix(2 * r, 1, 0.1f, rng)});
    for (const char* dir : {"fwd", "bwd"}) {
      tensors_.push_back({std::string(dir) + "_x", uniform_matrix(r, tok, glorot(tok, r), rng)});
      tensors_.push_back({std::string(dir) + "_h", uniform_matrix(r, r, glorot(r, r), rng)});
      tensors_.push_back({std::string(dir) + "_b", Eigen::MatrixXf::Zero(r, 1)});
    }
  }
}

void Scorer::restore(int slots, int rnn_dim) {
  slots_ = slots;
  rnn_dim_ = rnn_dim;
  const size_t expected = rnn_dim > 0 ? 13 : 6;
  if (tensors_.size() != expected) throw std::invalid_argument("Scorer: wrong number of tensors");
  if (tensors_[kW1].value.cols() != input_dim()) throw std::invalid_argument("Scorer: hidden layer shape mismatch");
}

int Scorer::ctx_dim() const {
  return rnn_dim_ > 0 ? 2 * rnn_dim_
                      : static_cast<int>(tensors_[kFormEmb].value.rows() + tensors_[kPosEmb].value.rows());
}

int Scorer::input_dim() const { return slots_ * ctx_dim(); }

void Scorer::set_form_vector(int id, const Eigen::VectorXf& v) {
  auto& emb = tensors_[kFormEmb].value;
  if (v.size() != emb.rows()) throw std::invalid_argument("embedding dimension mismatch");
  emb.col(id) = v;
}

Scorer::Context Scorer::encode(const EncodedSentence& s) const {
  Context ctx;
  const auto& fe = tensors_[kFormEmb].value;
  const auto& pe = tensors_[kPosEmb].value;
  const int n = static_cast<int>(s.form.size());
  ctx.tok.resize(fe.rows() + pe.rows(), n);
  for (int k = 0; k < n; ++k) {
    ctx.tok.col(k).head(fe.rows()) = fe.col(s.form[static_cast<size_t>(k)]);
    ctx.tok.col(k).tail(pe.rows()) = pe.col(s.pos[static_cast<size_t>(k)]);
  }
  if (rnn_dim_ == 0) return ctx;
  const int r = rnn_dim_;
  ctx.fwd.resize(r, n);
  ctx.bwd.resize(r, n);
  Eigen::VectorXf h = Eigen::VectorXf::Zero(r);
  for (int k = 0; k < n; ++k) {
    h = (tensors_[kFx].value * ctx.tok.col(k) + tensors_[kFh].value * h + tensors_[kFb].value.col(0))
            .array()
            .tanh()
            .matrix();
    ctx.fwd.col(k) = h;
  }
  h.setZero();
  for (int k = n - 1; k >= 0; --k) {
    h = (tensors_[kBx].value * ctx.tok.col(k) + tensors_[kBh].value * h + tensors_[kBb].value.col(0))
            .array()
            .tanh()
            .matrix();
    ctx.bwd.col(k) = h;
  }
  return ctx;
}

Eigen::VectorXf Scorer::slot_vector(const Context& ctx, int node) const {
  if (rnn_dim_ > 0) {
    if (node == kNullSlot) return tensors_[kNullCtx].value.col(0);
    Eigen::VectorXf v(2 * rnn_dim_);
    v << ctx.fwd.col(node), ctx.bwd.col(node);
    return v;
  }
  if (node != kNullSlot) return ctx.tok.col(node);
  const auto& fe = tensors_[kFormEmb].value;
  const auto& pe = tensors_[kPosEmb].value;
  Eigen::VectorXf v(fe.rows() + pe.rows());
  v << fe.col(Vocab::kNull), pe.col(Vocab::kNull);
  return v;
}

Eigen::VectorXf Scorer::score(const EncodedSentence&, const Context& ctx, const FeatureView& fv,
                              StepCache* cache) const {
  if (static_cast<int>(fv.slots.size()) != slots_) throw std::invalid_argument("Scorer: feature arity mismatch");
  const int d = ctx_dim();
  Eigen::VectorXf x(slots_ * d);
  for (int i = 0; i < slots_; ++i) x.segment(i * d, d) = slot_vector(ctx, fv.slots[static_cast<size_t>(i)]);
  Eigen::VectorXf h = (tensors_[kW1].value * x + tensors_[kB1].value.col(0)).array().tanh().matrix();
  Eigen::VectorXf out = W2() * h + tensors_[kB2].value.col(0);
  if (cache) {
    cache->x = std::move(x);
    cache->h = std::move(h);
    cache->slots = fv.slots;
  }
  return out;
}

Scorer::Gradient Scorer::zero_gradient(int sentence_nodes) const {
  Gradient g;
  for (const Tensor& t : tensors_) g.g.push_back(Eigen::MatrixXf::Zero(t.value.rows(), t.value.cols()));
  if (rnn_dim_ > 0) g.dctx = Eigen::MatrixXf::Zero(2 * rnn_dim_, sentence_nodes);
  return g;
}

void Scorer::backward(const EncodedSentence& s, const StepCache& cache, const Eigen::VectorXf& dscores,
                      Gradient& grad) const {
  grad.g[kW2].noalias() += dscores * cache.h.transpose();
  grad.g[kB2].col(0) += dscores;
  Eigen::VectorXf dz = (W2().transpose() * dscores).array() * (1.0f - cache.h.array().square());
  grad.g[kW1].noalias() += dz * cache.x.transpose();
  grad.g[kB1].col(0) += dz;
  const Eigen::VectorXf dx = tensors_[kW1].value.transpose() * dz;

  const int d = ctx_dim();
  const auto fd = tensors_[kFormEmb].value.rows();
  const auto pd = tensors_[kPosEmb].value.rows();
  for (int i = 0; i < slots_; ++i) {
    const int node = cache.slots[static_cast<size_t>(i)];
    auto seg = dx.segment(i * d, d);
    if (rnn_dim_ > 0) {
      if (node == kNullSlot)
        grad.g[kNullCtx].col(0) += seg;
      else
        grad.dctx.col(node) += seg;
      continue;
    }
    const int f = node == kNullSlot ? Vocab::kNull : s.form[static_cast<size_t>(node)];
    const int p = node == kNullSlot ? Vocab::kNull : s.pos[static_cast<size_t>(node)];
    grad.g[kFormEmb].col(f) += seg.head(fd);
    grad.g[kPosEmb].col(p) += seg.tail(pd);
  }
}

void Scorer::backward_encoder(const EncodedSentence& s, const Context& ctx, Gradient& grad) const {
  if (rnn_dim_ == 0) return;
  const int r = rnn_dim_;
  const int n = static_cast<int>(ctx.tok.cols());
  Eigen::MatrixXf dtok = Eigen::MatrixXf::Zero(ctx.tok.rows(), n);

  auto run = [&](const Eigen::MatrixXf& states, size_t wx, size_t wh, size_t wb, int row0, bool forward) {
    Eigen::VectorXf carry = Eigen::VectorXf::Zero(r);
    for (int step = 0; step < n; ++step) {
      // walk against the direction the states were computed in
      const int k = forward ? n - 1 - step : step;
      const int prev = forward ? k - 1 : k + 1;
      Eigen::VectorXf dh = grad.dctx.col(k).segment(row0, r) + carry;
      Eigen::VectorXf dz = dh.array() * (1.0f - states.col(k).array().square());
      grad.g[wx].noalias() += dz * ctx.tok.col(k).transpose();
      if (prev >= 0 && prev < n) grad.g[wh].noalias() += dz * states.col(prev).transpose();
      grad.g[wb].col(0) += dz;
      dtok.col(k).noalias() += tensors_[wx].value.transpose() * dz;
      carry = tensors_[wh].value.transpose() * dz;
    }
  };
  run(ctx.fwd, kFx, kFh, kFb, 0, true);
  run(ctx.bwd, kBx, kBh, kBb, r, false);

  const auto fd = tensors_[kFormEmb].value.rows();
  const auto pd = tensors_[kPosEmb].value.rows();
  for (int k = 0; k < n; ++k) {
    grad.g[kFormEmb].col(s.form[static_cast<size_t>(k)]) += dtok.col(k).head(fd);
    grad.g[kPosEmb].col(s.pos[static_cast<size_t>(k)]) += dtok.col(k).tail(pd);
  }
}

void Scorer::sgd_step(const Gradient& grad, float learning_rate) {
  for (size_t i = 0; i < tensors_.size(); ++i) tensors_[i].value -= learning_rate * grad.g[i];
}

bool Scorer::operator==(const Scorer& o) const {
  if (slots_ != o.slots_ || rnn_dim_ != o.rnn_dim_ || tensors_.size() != o.tensors_.size()) return false;
  for (size_t i = 0; i < tensors_.size(); ++i) {
    const auto& a = tensors_[i];
    const auto& b = o.tensors_[i];
    if (a.name != b.name || a.value.rows() != b.value.rows() || a.value.cols() != b.value.cols() ||
        a.value != b.value)
      return false;
  }
  return true;
}

}  // namespace twoplanar
