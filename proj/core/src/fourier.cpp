#include <landaulab/fourier.hpp>

#include <algorithm>

#include <unsupported/Eigen/FFT>

#include <landaulab/errors.hpp>

namespace landaulab {

struct AngularFFT::Impl {
    mutable Eigen::FFT<double> fft;
    mutable std::vector<std::complex<double>> in, out;
};

AngularFFT::AngularFFT(int n_angular) : n_(n_angular), impl_(std::make_shared<Impl>()) {
    if (n_ < 2) throw GridError("angular resolution must be at least 2");
    impl_->in.resize(static_cast<size_t>(n_));
    impl_->out.resize(static_cast<size_t>(n_));
}

void AngularFFT::analyze(const Eigen::VectorXcd& field, Eigen::MatrixXcd& coef) const {
    if (field.size() % n_ != 0) throw GridError("field size not a multiple of n_angular");
    const Eigen::Index nr = field.size() / n_;
    coef.resize(nr, n_);
    const double scale = 1.0 / n_;
    for (Eigen::Index ir = 0; ir < nr; ++ir) {
        std::copy_n(field.data() + ir * n_, n_, impl_->in.begin());
        impl_->fft.fwd(impl_->out, impl_->in);
        for (int l = 0; l < n_; ++l) coef(ir, l) = impl_->out[static_cast<size_t>(l)] * scale;
    }
}

void AngularFFT::synthesize(const Eigen::MatrixXcd& coef, Eigen::VectorXcd& field) const {
    if (coef.cols() != n_) throw GridError("coefficient matrix has wrong angular size");
    const Eigen::Index nr = coef.rows();
    field.resize(nr * n_);
    for (Eigen::Index ir = 0; ir < nr; ++ir) {
        for (int l = 0; l < n_; ++l)
            impl_->in[static_cast<size_t>(l)] = coef(ir, l) * static_cast<double>(n_);
        impl_->fft.inv(impl_->out, impl_->in);
        std::copy_n(impl_->out.begin(), n_, field.data() + ir * n_);
    }
}

}  // namespace landaulab
