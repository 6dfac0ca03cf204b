#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "chaoswave/errors.hpp"
#include "chaoswave/image.hpp"
#include "chaoswave/key.hpp"
#include "chaoswave/metrics.hpp"
#include "chaoswave/pgm.hpp"
#include "chaoswave/pipeline.hpp"

namespace py = pybind11;
namespace cw = chaoswave;

namespace {

cw::GrayImage image_from_array(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2)
        throw cw::ShapeError("image must be a 2-D uint8 array");
    const auto rows = static_cast<std::size_t>(arr.shape(0));
    const auto cols = static_cast<std::size_t>(arr.shape(1));
    std::vector<std::uint8_t> pixels(rows * cols);
    std::memcpy(pixels.data(), arr.data(), pixels.size());
    return cw::GrayImage(rows, cols, std::move(pixels));
}

py::array_t<std::uint8_t> array_from_image(const cw::GrayImage& image) {
    py::array_t<std::uint8_t> arr({image.rows, image.cols});
    std::memcpy(arr.mutable_data(), image.pixels.data(), image.pixels.size());
    return arr;
}

py::array_t<double> array_from_field(const cw::RealField& field) {
    py::array_t<double> arr({field.rows, field.cols});
    std::memcpy(arr.mutable_data(), field.values.data(), field.values.size() * sizeof(double));
    return arr;
}

std::vector<std::uint8_t> bytes_from_py(const py::bytes& data) {
    const std::string_view view = data;
    return {view.begin(), view.end()};
}

cw::Direction direction_from_name(const std::string& name) {
    if (name == "horizontal") return cw::Direction::horizontal;
    if (name == "vertical") return cw::Direction::vertical;
    if (name == "diagonal") return cw::Direction::diagonal;
    throw cw::ParamError("direction must be horizontal, vertical or diagonal");
}

py::dict report_to_dict(const cw::MetricsReport& report) {
    py::dict corr;
    corr["horizontal"] = report.corr_horizontal;
    corr["vertical"] = report.corr_vertical;
    corr["diagonal"] = report.corr_diagonal;
    py::dict out;
    out["correlation"] = corr;
    out["entropy"] = report.entropy_bits;
    out["npcr"] = report.npcr_percent;
    out["chi_square"] = report.hist.chi_square;
    out["dof"] = cw::Histogram::kDof;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chaotic wavelet-domain grayscale image cipher and its analysis suite.";

    py::register_exception<cw::ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<cw::ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<cw::FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<cw::IoError>(m, "IoError", PyExc_OSError);

    py::class_<cw::SecretKey>(m, "SecretKey")
        .def(py::init<>())
        .def(py::init([](double x0, double m_, std::uint32_t n1, std::uint32_t n2,
                         std::uint32_t n3, std::uint32_t n4, double alpha) {
                 cw::SecretKey key{x0, m_, n1, n2, n3, n4, alpha};
                 key.validate();
                 return key;
             }),
             py::arg("x0") = 0.123456, py::arg("m") = 0.489, py::arg("n1") = 1,
             py::arg("n2") = 2, py::arg("n3") = 3, py::arg("n4") = 4, py::arg("alpha") = 0.2)
        .def_readwrite("x0", &cw::SecretKey::x0)
        .def_readwrite("m", &cw::SecretKey::m)
        .def_readwrite("n1", &cw::SecretKey::n1)
        .def_readwrite("n2", &cw::SecretKey::n2)
        .def_readwrite("n3", &cw::SecretKey::n3)
        .def_readwrite("n4", &cw::SecretKey::n4)
        .def_readwrite("alpha", &cw::SecretKey::alpha)
        .def("validate", &cw::SecretKey::validate)
        .def("__repr__", [](const cw::SecretKey& k) {
            return "SecretKey(x0=" + std::to_string(k.x0) + ", m=" + std::to_string(k.m) +
                   ", n=(" + std::to_string(k.n1) + "," + std::to_string(k.n2) + "," +
                   std::to_string(k.n3) + "," + std::to_string(k.n4) +
                   "), alpha=" + std::to_string(k.alpha) + ")";
        });

    m.def("encrypt",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& image,
             const cw::SecretKey& key) {
              const auto blob = cw::encrypt(image_from_array(image), key);
              const auto bytes = blob.to_bytes();
              return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
          },
          py::arg("image"), py::arg("key"),
          "Encrypt a 2-D uint8 array; returns the serialized cipher blob.");

    m.def("decrypt",
          [](const py::bytes& blob_bytes, const cw::SecretKey& key) {
              const auto blob = cw::CipherBlob::from_bytes(bytes_from_py(blob_bytes));
              return array_from_image(cw::decrypt(blob, key));
          },
          py::arg("blob"), py::arg("key"),
          "Decrypt a serialized cipher blob back to a 2-D uint8 array.");

    m.def("shuffled_preview",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& image,
             const cw::SecretKey& key) {
              return array_from_field(cw::shuffled_preview(image_from_array(image), key));
          },
          py::arg("image"), py::arg("key"),
          "The synthesized intermediate after shuffle and modulation, as float64.");

    m.def("payload",
          [](const py::bytes& blob_bytes) {
              const auto blob = cw::CipherBlob::from_bytes(bytes_from_py(blob_bytes));
              return py::bytes(reinterpret_cast<const char*>(blob.payload.data()),
                               blob.payload.size());
          },
          py::arg("blob"), "The raw ciphertext byte stream inside a blob.");

    m.def("display_plane",
          [](const py::bytes& blob_bytes) {
              const auto blob = cw::CipherBlob::from_bytes(bytes_from_py(blob_bytes));
              return array_from_image(cw::display_plane(blob));
          },
          py::arg("blob"), "First rows*cols payload bytes reshaped to an image.");

    m.def("entropy",
          [](const py::bytes& data) { return cw::entropy(bytes_from_py(data)); },
          py::arg("data"), "Shannon entropy in bits per byte.");

    m.def("npcr",
          [](const py::bytes& a, const py::bytes& b) {
              return cw::npcr(bytes_from_py(a), bytes_from_py(b));
          },
          py::arg("a"), py::arg("b"), "Percentage of differing positions.");

    m.def("histogram",
          [](const py::bytes& data) {
              const auto hist = cw::histogram(bytes_from_py(data));
              return py::make_tuple(hist.counts, hist.chi_square);
          },
          py::arg("data"), "Byte-value counts and the uniformity chi-square.");

    m.def("adjacent_correlation",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& image,
             const std::string& direction, std::size_t count, std::uint64_t seed) {
              const auto img = image_from_array(image);
              return cw::correlation(
                  cw::sample_adjacent_pairs(img, direction_from_name(direction), count, seed));
          },
          py::arg("image"), py::arg("direction"), py::arg("count") = 1000, py::arg("seed") = 0,
          "Correlation of seeded random adjacent-pixel pairs.");

    m.def("analyze_plain",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& image,
             std::uint64_t seed) {
              return report_to_dict(cw::analyze_plain(image_from_array(image), seed));
          },
          py::arg("image"), py::arg("seed") = 0);

    m.def("analyze_cipher",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& plain,
             const py::bytes& blob_bytes, std::uint64_t seed) {
              const auto blob = cw::CipherBlob::from_bytes(bytes_from_py(blob_bytes));
              return report_to_dict(cw::analyze_cipher(image_from_array(plain), blob, seed));
          },
          py::arg("plain"), py::arg("blob"), py::arg("seed") = 0);

    m.def("key_sensitivity",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& image,
             const cw::SecretKey& key, double delta, std::uint64_t seed) {
              return report_to_dict(cw::key_sensitivity(image_from_array(image), key, delta, seed));
          },
          py::arg("image"), py::arg("key"), py::arg("delta") = 1e-14, py::arg("seed") = 0,
          "Metrics of the decryption under a perturbed x0, against the plain image.");

    m.def("load_key_file", &cw::load_key_file, py::arg("path"));
    m.def("save_key_file", &cw::save_key_file, py::arg("key"), py::arg("path"));

    m.def("read_pgm",
          [](const std::string& path) { return array_from_image(cw::read_pgm(path)); },
          py::arg("path"));
    m.def("write_pgm",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& image,
             const std::string& path) { cw::write_pgm(image_from_array(image), path); },
          py::arg("image"), py::arg("path"));
}
