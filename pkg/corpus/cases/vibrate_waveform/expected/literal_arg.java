public class OnceOnly {
    void go(android.os.Vibrator v, long[] pat) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(VibrationEffect.createWaveform(buildPattern(), 1));
        } else {
            v.vibrate(pat, 2);
        }
    }

    static long[] buildPattern() {
        return new long[]{0, 200, 100, 200};
    }
}
