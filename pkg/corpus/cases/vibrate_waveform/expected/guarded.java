public class Sensible {
    void go(android.os.Vibrator v, long[] pat, int reps) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(pat, reps);
        }
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(VibrationEffect.createWaveform(buildPattern(), 1));
        } else {
            v.vibrate(pat, reps);
        }
    }

    static long[] buildPattern() {
        return new long[]{0, 200, 100, 200};
    }
}
