//! Every example must run to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(multiplication_table);
example!(composition_identities);
example!(maxwell_expansion);
example!(plane_wave_residuals);
example!(path_cross_check);
example!(derivations_g2);
