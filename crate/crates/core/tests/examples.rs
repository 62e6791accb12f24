//! Every example under `examples/` must run to completion.

mod gram_spectrum {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/gram_spectrum.rs"
    ));
}

mod pca_reconstruction {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/pca_reconstruction.rs"
    ));
}

mod spectrum_intervals {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/spectrum_intervals.rs"
    ));
}

mod verify_bound {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verify_bound.rs"
    ));
}

mod pareto_sweep {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/pareto_sweep.rs"
    ));
}

mod reduced_gradient {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/reduced_gradient.rs"
    ));
}

mod variance_forecast {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/variance_forecast.rs"
    ));
}

mod custom_objectives {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/custom_objectives.rs"
    ));
}

#[test]
fn gram_spectrum_example_runs() {
    gram_spectrum::run().expect("gram_spectrum example should run");
}

#[test]
fn pca_reconstruction_example_runs() {
    pca_reconstruction::run().expect("pca_reconstruction example should run");
}

#[test]
fn spectrum_intervals_example_runs() {
    spectrum_intervals::run().expect("spectrum_intervals example should run");
}

#[test]
fn verify_bound_example_runs() {
    verify_bound::run().expect("verify_bound example should run");
}

#[test]
fn pareto_sweep_example_runs() {
    pareto_sweep::run().expect("pareto_sweep example should run");
}

#[test]
fn reduced_gradient_example_runs() {
    reduced_gradient::run().expect("reduced_gradient example should run");
}

#[test]
fn variance_forecast_example_runs() {
    variance_forecast::run().expect("variance_forecast example should run");
}

#[test]
fn custom_objectives_example_runs() {
    custom_objectives::run().expect("custom_objectives example should run");
}
