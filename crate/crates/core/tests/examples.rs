//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($test:ident, $file:literal) => {
        #[test]
        fn $test() {
            #[allow(dead_code)]
            mod ex {
                include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
            }
            ex::run_example().expect($file);
        }
    };
}

example!(valued_scalars_runs, "valued_scalars.rs");
example!(newton_polygons_runs, "newton_polygons.rs");
example!(berkovich_points_runs, "berkovich_points.rs");
example!(wild_profile_runs, "wild_profile.rs");
example!(green_functions_runs, "green_functions.rs");
example!(lyapunov_exponents_runs, "lyapunov_exponents.rs");
example!(fixed_points_runs, "fixed_points.rs");
example!(family_dichotomy_runs, "family_dichotomy.rs");
example!(bernoulli_model_runs, "bernoulli_model.rs");
example!(cli_tour_runs, "cli_tour.rs");
